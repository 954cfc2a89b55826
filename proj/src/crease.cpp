#include "regsel/crease.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "regsel/error.hpp"

namespace regsel {

namespace {

bool near(double a, double b) { return std::abs(a - b) <= kCoordTolerance; }

// Counterclockwise perimeter parameter in [0, 4) for a point on the square.
double perimeter_param(const Point &p) {
  if (near(p.y, 0) && !near(p.x, 1))
    return p.x;
  if (near(p.x, 1) && !near(p.y, 1))
    return 1 + p.y;
  if (near(p.y, 1) && !near(p.x, 0))
    return 2 + (1 - p.x);
  return 3 + (1 - p.y);
}

bool on_square_boundary(const Point &p) {
  return near(p.x, 0) || near(p.x, 1) || near(p.y, 0) || near(p.y, 1);
}

double cross(const Point &o, const Point &a, const Point &b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int orient(const Point &o, const Point &a, const Point &b) {
  double c = cross(o, a, b);
  if (std::abs(c) <= kCoordTolerance)
    return 0;
  return c > 0 ? 1 : -1;
}

bool on_segment(const Point &p, const Point &a, const Point &b) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) - kCoordTolerance <= p.x &&
         p.x <= std::max(a.x, b.x) + kCoordTolerance && std::min(a.y, b.y) - kCoordTolerance <= p.y &&
         p.y <= std::max(a.y, b.y) + kCoordTolerance;
}

bool segments_meet(const Point &a, const Point &b, const Point &c, const Point &d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0)
    return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

bool same_side(const Point &a, const Point &b) {
  return (near(a.x, 0) && near(b.x, 0)) || (near(a.x, 1) && near(b.x, 1)) || (near(a.y, 0) && near(b.y, 0)) ||
         (near(a.y, 1) && near(b.y, 1));
}

double parse_coord(const nlohmann::json &v, std::optional<Rational> &exact) {
  if (v.is_number())
    return v.get<double>();
  if (v.is_string()) {
    auto s = v.get<std::string>();
    auto slash = s.find('/');
    Rational r;
    auto parse_ll = [&](std::string_view t, long long &out) {
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
      if (ec != std::errc{} || ptr != t.data() + t.size())
        throw Error("parse_error", "bad rational coordinate '" + s + "'");
    };
    if (slash == std::string::npos) {
      parse_ll(s, r.num);
    } else {
      parse_ll(std::string_view(s).substr(0, slash), r.num);
      parse_ll(std::string_view(s).substr(slash + 1), r.den);
    }
    if (r.den == 0)
      throw Error("parse_error", "zero denominator in '" + s + "'");
    if (r.den < 0) {
      r.den = -r.den;
      r.num = -r.num;
    }
    exact = r;
    return static_cast<double>(r.num) / static_cast<double>(r.den);
  }
  throw Error("parse_error", "coordinate must be a number or a \"p/q\" string");
}

} // namespace

CreasePattern make_crease_pattern(std::vector<Point> vertices, std::vector<std::pair<int, int>> creases) {
  CreasePattern cp;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto &p = vertices[i];
    if (p.x < -kCoordTolerance || p.x > 1 + kCoordTolerance || p.y < -kCoordTolerance ||
        p.y > 1 + kCoordTolerance)
      throw Error("outside_sheet", "vertex " + std::to_string(i) + " lies outside the unit square");
    for (std::size_t j = 0; j < i; ++j)
      if (near(p.x, vertices[j].x) && near(p.y, vertices[j].y))
        throw Error("duplicate_vertex", "vertices " + std::to_string(j) + " and " + std::to_string(i) +
                                            " coincide");
  }
  const std::pair<double, double> corners[4] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  cp.sheet_corner.assign(vertices.size(), false);
  for (const auto &c : corners) {
    auto it = std::find_if(vertices.begin(), vertices.end(),
                           [&](const Point &p) { return near(p.x, c.first) && near(p.y, c.second); });
    if (it == vertices.end()) {
      Point q;
      q.x = c.first;
      q.y = c.second;
      q.exact_x = Rational{static_cast<long long>(c.first), 1};
      q.exact_y = Rational{static_cast<long long>(c.second), 1};
      vertices.push_back(q);
      cp.sheet_corner.push_back(true);
    } else {
      cp.sheet_corner[it - vertices.begin()] = true;
    }
  }

  // Keep interior creases, dropping duplicates and segments along the sheet edge.
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : creases) {
    if (a < 0 || b < 0 || a >= static_cast<int>(vertices.size()) || b >= static_cast<int>(vertices.size()))
      throw Error("parse_error", "edge refers to a missing vertex");
    if (a == b)
      throw Error("degenerate_crease", "crease joins vertex " + std::to_string(a) + " to itself");
    if (same_side(vertices[a], vertices[b]))
      continue;
    auto key = std::minmax(a, b);
    if (seen.insert(key).second)
      cp.creases.emplace_back(a, b);
  }
  for (std::size_t i = 0; i < cp.creases.size(); ++i) {
    auto [a, b] = cp.creases[i];
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (static_cast<int>(v) == a || static_cast<int>(v) == b)
        continue;
      if (on_segment(vertices[v], vertices[a], vertices[b]))
        throw Error("not_subdivided", "vertex " + std::to_string(v) + " lies inside crease " +
                                          std::to_string(a) + "-" + std::to_string(b));
    }
    for (std::size_t j = 0; j < i; ++j) {
      auto [c, d] = cp.creases[j];
      if (a == c || a == d || b == c || b == d)
        continue;
      if (segments_meet(vertices[a], vertices[b], vertices[c], vertices[d]))
        throw Error("not_subdivided", "creases " + std::to_string(a) + "-" + std::to_string(b) + " and " +
                                          std::to_string(c) + "-" + std::to_string(d) +
                                          " cross away from a vertex");
    }
  }

  // Sheet boundary in counterclockwise order.
  std::vector<int> boundary;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (on_square_boundary(vertices[v]))
      boundary.push_back(static_cast<int>(v));
  std::sort(boundary.begin(), boundary.end(),
            [&](int a, int b) { return perimeter_param(vertices[a]) < perimeter_param(vertices[b]); });

  // Darts: creases first (2i, 2i+1), then boundary edges.
  struct Dart {
    int from, to;
  };
  std::vector<Dart> darts;
  for (auto [a, b] : cp.creases) {
    darts.push_back({a, b});
    darts.push_back({b, a});
  }
  std::vector<int> walk;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    int a = boundary[i], b = boundary[(i + 1) % boundary.size()];
    walk.push_back(static_cast<int>(darts.size()));
    darts.push_back({a, b});
    darts.push_back({b, a});
  }
  std::vector<int> opposite(darts.size());
  for (std::size_t d = 0; d < darts.size(); ++d)
    opposite[d] = static_cast<int>(d ^ 1);

  std::vector<std::vector<int>> rotations(vertices.size());
  for (std::size_t d = 0; d < darts.size(); ++d)
    rotations[darts[d].from].push_back(static_cast<int>(d));
  auto angle = [&](int d) {
    const auto &p = vertices[darts[d].from];
    const auto &q = vertices[darts[d].to];
    return std::atan2(q.y - p.y, q.x - p.x);
  };
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (rotations[v].empty())
      throw Error("isolated_vertex", "vertex " + std::to_string(v) + " has no creases");
    std::sort(rotations[v].begin(), rotations[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
  }

  cp.sector_angles.assign(vertices.size(), {});
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (on_square_boundary(vertices[v]))
      continue;
    const auto &rot = rotations[v];
    double sum = 0;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      double a = angle(rot[i]), b = angle(rot[(i + 1) % rot.size()]);
      double s = (b - a) * 180.0 / std::numbers::pi;
      if (s <= 0)
        s += 360.0;
      cp.sector_angles[v].push_back(s);
      sum += s;
    }
    if (std::abs(sum - 360.0) > 1e-9)
      throw Error("bad_angles", "sector angles at vertex " + std::to_string(v) + " do not sum to 360");
  }

  cp.vertices = std::move(vertices);
  cp.map = PlanarDiagram(std::move(rotations), std::move(opposite), SurfaceKind::disk, std::move(walk));
  return cp;
}

CreasePattern parse_fold(const nlohmann::json &fold) {
  if (!fold.is_object() || !fold.contains("vertices_coords") || !fold.contains("edges_vertices"))
    throw Error("parse_error", "FOLD object needs vertices_coords and edges_vertices");
  std::vector<Point> pts;
  const auto &vc = fold.at("vertices_coords");
  for (std::size_t i = 0; i < vc.size(); ++i) {
    const auto &c = vc[i];
    if (!c.is_array() || c.size() < 2)
      throw Error("parse_error", "vertices_coords[" + std::to_string(i) + "] must be [x, y]");
    Point p;
    p.x = parse_coord(c[0], p.exact_x);
    p.y = parse_coord(c[1], p.exact_y);
    pts.push_back(p);
  }
  const auto &ev = fold.at("edges_vertices");
  const nlohmann::json *assign = fold.contains("edges_assignment") ? &fold.at("edges_assignment") : nullptr;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const auto &e = ev[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw Error("parse_error", "edges_vertices[" + std::to_string(i) + "] must be [i, j]");
    if (assign && i < assign->size() && (*assign)[i].is_string() && (*assign)[i].get<std::string>() == "B")
      continue;
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return make_crease_pattern(std::move(pts), std::move(edges));
}

CreasePattern parse_fold_text(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error("parse_error", std::string("invalid JSON: ") + e.what());
  }
  return parse_fold(j);
}

DiskDiagram make_disk_diagram(const DiskPd &pd) {
  const int n = static_cast<int>(pd.crossings.size());
  const int m = static_cast<int>(pd.boundary.size());
  if (m == 0)
    throw Error("bad_boundary", "disk diagram needs at least one boundary vertex");
  std::vector<std::vector<int>> rotations;
  std::map<int, std::vector<int>> label_darts;
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (pd.crossings[x].size() != 4)
      throw Error("parse_error", "crossing " + std::to_string(x) + " needs four labels");
    std::vector<int> rot;
    for (int p = 0; p < 4; ++p) {
      label_darts[pd.crossings[x][p]].push_back(next);
      rot.push_back(next++);
    }
    rotations.push_back(std::move(rot));
  }
  std::vector<std::vector<int>> interior(m);
  for (int j = 0; j < m; ++j)
    for (int label : pd.boundary[j]) {
      label_darts[label].push_back(next);
      interior[j].push_back(next++);
    }
  std::vector<int> forward(m), backward(m);
  for (int j = 0; j < m; ++j) {
    forward[j] = next++;  // at vertex j, towards j+1
    backward[j] = next++; // at vertex j+1, towards j
  }
  std::vector<int> opposite(next, -1);
  std::vector<int> dart_label(next, -1);
  for (const auto &[label, ds] : label_darts) {
    if (ds.size() != 2)
      throw Error("bad_labels", "edge label " + std::to_string(label) + " appears " +
                                    std::to_string(ds.size()) + " time(s), expected 2");
    opposite[ds[0]] = ds[1];
    opposite[ds[1]] = ds[0];
    dart_label[ds[0]] = dart_label[ds[1]] = label;
  }
  for (int j = 0; j < m; ++j) {
    opposite[forward[j]] = backward[j];
    opposite[backward[j]] = forward[j];
  }
  for (int j = 0; j < m; ++j) {
    std::vector<int> rot{forward[j]};
    rot.insert(rot.end(), interior[j].begin(), interior[j].end());
    rot.push_back(backward[(j + m - 1) % m]);
    rotations.push_back(std::move(rot));
  }
  DiskDiagram out;
  out.map = PlanarDiagram(std::move(rotations), std::move(opposite), SurfaceKind::disk, forward);
  out.edge_label.assign(out.map.edge_count(), -1);
  for (std::size_t e = 0; e < out.map.edge_count(); ++e)
    out.edge_label[e] = dart_label[out.map.edge_darts(static_cast<int>(e)).first];
  return out;
}

DiskPd parse_disk_pd(const nlohmann::json &j) {
  DiskPd pd;
  try {
    for (const auto &c : j.at("crossings"))
      pd.crossings.push_back(c.get<std::vector<int>>());
    for (const auto &b : j.at("boundary")) {
      if (b.is_array())
        pd.boundary.push_back(b.get<std::vector<int>>());
      else
        pd.boundary.push_back({b.get<int>()});
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error("parse_error", std::string("disk PD: ") + e.what());
  }
  return pd;
}

} // namespace regsel
