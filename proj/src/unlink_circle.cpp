#include <algorithm>
#include <deque>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "regsel/error.hpp"
#include "regsel/unlink.hpp"

namespace regsel {

namespace {

// Dart of the edge labelled `label` at its tail end.
int tail_dart(const LinkDiagram &d, int label) {
  const int n = d.crossing_count();
  if (label < 0) {
    int i = -1 - label;
    if (i >= d.free_loops())
      throw Error("unknown_label", "no free loop " + std::to_string(label));
    return 4 * n + 2 * i;
  }
  auto [a, b] = d.map().edge_darts(d.edge_of_label(label));
  for (int x : {a, b}) {
    const auto &c = d.crossings()[x / 4];
    int p = x % 4;
    if (p == 2 || p == c.over_out())
      return x;
  }
  return a;
}

int right_face(const LinkDiagram &d, int label) { return d.map().region_of(tail_dart(d, label)); }
int left_face(const LinkDiagram &d, int label) {
  return d.map().region_of(d.map().opposite(tail_dart(d, label)));
}

Transit ray_transit(const LinkDiagram &d, int dart) {
  int label = d.label_of_edge(d.map().edge_of(dart));
  bool tail = tail_dart(d, label) == dart;
  return {label, tail ? 0.1 : 0.9, tail ? 1 : -1};
}

struct DualStep {
  int label;
  int from, to;
};

// Shortest dual path from any region in `from` to any in `to`, skipping
// edges at the vertices in `avoid`.
std::optional<std::vector<DualStep>> dual_path(const LinkDiagram &d, const std::set<int> &from,
                                               const std::set<int> &to, const std::set<int> &avoid) {
  const auto &m = d.map();
  std::vector<std::vector<DualStep>> adj(m.region_count());
  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    auto [a, b] = m.edge_darts(static_cast<int>(e));
    if (avoid.count(m.vertex_of(a)) || avoid.count(m.vertex_of(b)))
      continue;
    int ra = m.region_of(a), rb = m.region_of(b);
    if (ra == rb)
      continue;
    int label = d.label_of_edge(static_cast<int>(e));
    adj[ra].push_back({label, ra, rb});
    adj[rb].push_back({label, rb, ra});
  }
  std::vector<int> prev(m.region_count(), -2);
  std::vector<DualStep> via(m.region_count());
  std::deque<int> q;
  for (int r : from) {
    prev[r] = -1;
    q.push_back(r);
  }
  while (!q.empty()) {
    int r = q.front();
    q.pop_front();
    if (to.count(r)) {
      std::vector<DualStep> path;
      for (; prev[r] >= 0; r = prev[r])
        path.push_back(via[r]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (const auto &s : adj[r])
      if (prev[s.to] == -2) {
        prev[s.to] = r;
        via[s.to] = s;
        q.push_back(s.to);
      }
  }
  return std::nullopt;
}

std::set<int> regions_at(const LinkDiagram &d, int v) {
  std::set<int> out;
  for (int dd : d.map().darts_at(v))
    out.insert(d.map().region_of(dd));
  return out;
}

int corner_in(const LinkDiagram &d, int v, int region) {
  auto darts = d.map().darts_at(v);
  for (std::size_t p = 0; p < darts.size(); ++p)
    if (d.map().region_of(darts[p]) == region)
      return static_cast<int>(p);
  throw Error("bad_circle", "vertex has no corner in the region");
}

// Thickened chain of vertices; paths[j] joins sites[j] to sites[j+1].
CirclePlacement chain_circle(const LinkDiagram &d, const std::vector<int> &sites,
                             const std::vector<std::vector<DualStep>> &paths,
                             const std::vector<std::pair<int, int>> &ends) {
  CirclePlacement c;
  std::map<int, int> uses;
  std::vector<std::vector<Transit>> out(paths.size()), back(paths.size());
  for (std::size_t j = 0; j < paths.size(); ++j)
    for (const auto &s : paths[j]) {
      double mid = 0.5 + 0.06 * uses[s.label]++;
      const double delta = 0.02;
      if (s.from == right_face(d, s.label)) {
        out[j].push_back({s.label, mid + delta, 1});
        back[j].push_back({s.label, mid - delta, -1});
      } else {
        out[j].push_back({s.label, mid - delta, -1});
        back[j].push_back({s.label, mid + delta, 1});
      }
    }
  std::function<void(std::size_t, int)> visit = [&](std::size_t j, int q) {
    auto darts = d.map().darts_at(sites[j]);
    const int deg = static_cast<int>(darts.size());
    const bool departs = j + 1 < sites.size();
    const int r = departs ? corner_in(d, sites[j], ends[j].first) : -1;
    for (int k = 0; k < deg; ++k) {
      c.transits.push_back(ray_transit(d, darts[(q + k) % deg]));
      if (departs && (q + k + 1) % deg == r) {
        c.transits.insert(c.transits.end(), out[j].begin(), out[j].end());
        visit(j + 1, corner_in(d, sites[j + 1], ends[j].second));
        c.transits.insert(c.transits.end(), back[j].rbegin(), back[j].rend());
      }
    }
  };
  int start = sites.size() > 1 ? corner_in(d, sites[0], ends[0].first) : 0;
  visit(0, start);
  return c;
}

bool valid_circle(const LinkDiagram &d, const CirclePlacement &c) {
  try {
    split_by_circle(d, c);
    return true;
  } catch (const Error &) {
    return false;
  }
}

std::optional<CirclePlacement> try_chain(const LinkDiagram &d, const std::vector<int> &sites,
                                         std::optional<int> region, int max_path, int *length = nullptr) {
  std::vector<std::vector<DualStep>> paths;
  std::vector<std::pair<int, int>> ends;
  int total = 0;
  for (std::size_t j = 0; j + 1 < sites.size(); ++j) {
    if (region) {
      paths.emplace_back();
      ends.emplace_back(*region, *region);
      continue;
    }
    auto a = regions_at(d, sites[j]), b = regions_at(d, sites[j + 1]);
    auto p = dual_path(d, a, b, {sites[j], sites[j + 1]});
    if (!p)
      return std::nullopt;
    int r0 = p->empty() ? *std::find_if(a.begin(), a.end(), [&](int r) { return b.count(r) > 0; })
                        : p->front().from;
    int r1 = p->empty() ? r0 : p->back().to;
    total += static_cast<int>(p->size());
    paths.push_back(std::move(*p));
    ends.emplace_back(r0, r1);
  }
  if (total > max_path)
    return std::nullopt;
  if (length)
    *length = total;
  auto c = chain_circle(d, sites, paths, ends);
  if (!valid_circle(d, c))
    return std::nullopt;
  return c;
}

std::string circle_key(const CirclePlacement &c) {
  std::vector<std::string> parts;
  for (const auto &t : c.transits) {
    std::ostringstream s;
    s << t.label << ':' << static_cast<int>(t.t * 1000) << ':' << t.side;
    parts.push_back(s.str());
  }
  std::string best;
  for (std::size_t r = 0; r < parts.size() || r == 0; ++r) {
    std::string k;
    for (std::size_t i = 0; i < parts.size(); ++i)
      k += parts[(r + i) % parts.size()] + ";";
    if (r == 0 || k < best)
      best = k;
  }
  return best;
}

} // namespace

std::vector<int> SplitDiagram::side_region_count() const {
  std::vector<int> out(2, 0);
  for (int s : region_side)
    ++out[s];
  return out;
}

SplitDiagram split_by_circle(const LinkDiagram &d, const CirclePlacement &circle) {
  const CirclePlacement c = infer_sides(d, circle);
  const int n = d.crossing_count();
  const auto &base = d.map();
  SplitDiagram out;
  if (c.transits.empty()) {
    out.map = base;
  } else {
    if (c.transits.size() % 2 != 0)
      throw Error("bad_circle", "a closed curve crosses the diagram an even number of times");
    const int V = static_cast<int>(base.vertex_count());
    const int N = static_cast<int>(base.dart_count());
    const int k = static_cast<int>(c.transits.size());
    std::vector<std::vector<int>> rot;
    for (int v = 0; v < V; ++v) {
      auto ds = base.darts_at(v);
      rot.emplace_back(ds.begin(), ds.end());
    }
    std::vector<int> opp(N + 4 * k, -1);
    for (int dd = 0; dd < N; ++dd)
      opp[dd] = base.opposite(dd);
    auto fwd = [&](int i) { return N + 4 * i; };
    auto left = [&](int i) { return N + 4 * i + 1; };
    auto back = [&](int i) { return N + 4 * i + 2; };
    auto right = [&](int i) { return N + 4 * i + 3; };
    auto link = [&](int a, int b) {
      opp[a] = b;
      opp[b] = a;
    };
    std::map<int, std::vector<std::pair<double, int>>> by_label;
    for (int i = 0; i < k; ++i) {
      rot.push_back({fwd(i), left(i), back(i), right(i)});
      by_label[c.transits[i].label].emplace_back(c.transits[i].t, i);
    }
    for (auto &[label, ts] : by_label) {
      std::sort(ts.begin(), ts.end());
      for (std::size_t j = 1; j < ts.size(); ++j)
        if (ts[j].first == ts[j - 1].first)
          throw Error("bad_circle", "two transits at the same point of edge " + std::to_string(label));
      int prev = tail_dart(d, label);
      int head = base.opposite(prev);
      for (auto [t, i] : ts) {
        link(prev, back(i));
        prev = fwd(i);
      }
      link(prev, head);
    }
    for (int i = 0; i < k; ++i) {
      int j = (i + 1) % k;
      int from = c.transits[i].side > 0 ? left(i) : right(i);
      int to = c.transits[j].side > 0 ? right(j) : left(j);
      link(from, to);
    }
    try {
      out.map = PlanarDiagram(std::move(rot), std::move(opp), SurfaceKind::sphere);
    } catch (const Error &e) {
      throw Error("bad_circle", std::string("circle is not a simple closed curve: ") + e.what());
    }

    // Two-colour regions across chord edges.
    const auto &m = out.map;
    std::vector<std::vector<std::pair<int, int>>> adj(m.region_count());
    for (std::size_t e = 0; e < m.edge_count(); ++e) {
      auto [a, b] = m.edge_darts(static_cast<int>(e));
      int flip = (a >= N && (a - N) % 2 == 1) ? 1 : 0;
      adj[m.region_of(a)].emplace_back(m.region_of(b), flip);
      adj[m.region_of(b)].emplace_back(m.region_of(a), flip);
    }
    out.region_side.assign(m.region_count(), -1);
    int first_out = c.transits[0].side > 0 ? left(0) : right(0);
    int seed = m.region_of(m.opposite(first_out));
    out.region_side[seed] = 0;
    std::deque<int> q{seed};
    while (!q.empty()) {
      int r = q.front();
      q.pop_front();
      for (auto [t, flip] : adj[r]) {
        int s = out.region_side[r] ^ flip;
        if (out.region_side[t] < 0) {
          out.region_side[t] = s;
          q.push_back(t);
        } else if (out.region_side[t] != s) {
          throw Error("bad_circle", "circle does not separate the sphere consistently");
        }
      }
    }
    for (int &s : out.region_side)
      if (s < 0)
        s = 0;
  }
  const auto &m = out.map;
  if (out.region_side.empty())
    out.region_side.assign(m.region_count(), 0);
  out.crossing_side.resize(n);
  for (int x = 0; x < n; ++x)
    out.crossing_side[x] = out.region_side[m.region_of(LinkDiagram::dart(x, 0))];
  out.incidence = Gf2Matrix(n, m.region_count());
  for (const auto &r : m.regions())
    for (auto [v, cnt] : r.corners)
      if (v < n && cnt % 2 == 1)
        out.incidence.set(v, r.id);
  return out;
}

CirclePlacement infer_sides(const LinkDiagram &d, CirclePlacement c) {
  const std::size_t k = c.transits.size();
  bool missing = false;
  for (const auto &t : c.transits)
    missing = missing || t.side == 0;
  if (!missing || k == 0)
    return c;
  auto faces = [&](const Transit &t, int side) {
    int r = right_face(d, t.label), l = left_face(d, t.label);
    return side > 0 ? std::pair{r, l} : std::pair{l, r};
  };
  for (int first : {1, -1}) {
    if (c.transits[0].side != 0 && c.transits[0].side != first)
      continue;
    std::vector<int> sides{first};
    bool ok = true;
    for (std::size_t i = 1; i < k && ok; ++i) {
      int after = faces(c.transits[i - 1], sides.back()).second;
      ok = false;
      for (int s : {1, -1}) {
        if (c.transits[i].side != 0 && c.transits[i].side != s)
          continue;
        if (faces(c.transits[i], s).first == after) {
          sides.push_back(s);
          ok = true;
          break;
        }
      }
    }
    if (ok && faces(c.transits[k - 1], sides.back()).second == faces(c.transits[0], first).first) {
      for (std::size_t i = 0; i < k; ++i)
        c.transits[i].side = sides[i];
      return c;
    }
  }
  throw Error("bad_circle", "no consistent crossing direction for the transits");
}

CirclePlacement neighborhood_circle(const LinkDiagram &d, const std::vector<int> &sites) {
  if (sites.empty())
    return {};
  for (int v : sites)
    if (v < 0 || v >= static_cast<int>(d.map().vertex_count()))
      throw Error("unknown_crossing", "site " + std::to_string(v) + " out of range");
  if (auto c = try_chain(d, sites, std::nullopt, 1 << 20))
    return *c;
  std::vector<int> rev(sites.rbegin(), sites.rend());
  if (auto c = try_chain(d, rev, std::nullopt, 1 << 20))
    return *c;
  throw Error("bad_circle", "could not place a circle around the sites");
}

CirclePlacement star_circle(const LinkDiagram &d, const std::vector<int> &sites) {
  if (sites.empty())
    return {};
  std::set<int> common = regions_at(d, sites[0]);
  for (int v : sites) {
    std::set<int> here = regions_at(d, v), keep;
    std::set_intersection(common.begin(), common.end(), here.begin(), here.end(),
                          std::inserter(keep, keep.begin()));
    common = keep;
  }
  if (common.empty())
    throw Error("bad_circle", "sites share no region");
  for (int region : common) {
    std::vector<int> order = sites;
    std::sort(order.begin(), order.end());
    do {
      if (auto c = try_chain(d, order, region, 0))
        return *c;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  throw Error("bad_circle", "could not place a circle around the sites");
}

std::vector<int> dual_path_to_region(const LinkDiagram &d, int c, int target) {
  auto p = dual_path(d, regions_at(d, c), {target}, {c});
  if (!p)
    throw Error("no_path", "no dual path avoiding the crossing's own edges");
  std::vector<int> labels;
  for (const auto &s : *p)
    labels.push_back(s.label);
  return labels;
}

std::vector<CirclePlacement> circle_family(const LinkDiagram &d, int max_path) {
  std::vector<CirclePlacement> out{CirclePlacement{}};
  std::set<std::string> seen{circle_key(out[0])};
  auto add = [&](std::optional<CirclePlacement> c) {
    if (c && seen.insert(circle_key(*c)).second)
      out.push_back(std::move(*c));
  };
  const int n = d.crossing_count();
  for (int x = 0; x < n; ++x)
    add(try_chain(d, {x}, std::nullopt, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (b == a)
        continue;
      add(try_chain(d, {a, b}, std::nullopt, max_path));
      for (int e = 0; e < n; ++e)
        if (e != a && e != b)
          add(try_chain(d, {a, b, e}, std::nullopt, max_path));
    }
  return out;
}

} // namespace regsel
