#include "regsel/tangle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "regsel/error.hpp"

namespace regsel {

namespace {

std::vector<bool> forward_boundary(const PlanarDiagram &m) {
  std::vector<bool> f(m.dart_count(), false);
  for (int d : m.boundary_walk())
    f[d] = true;
  return f;
}

// Interior darts at a boundary vertex, counterclockwise from the sheet edge.
std::vector<int> interior_darts(const PlanarDiagram &m, const std::vector<bool> &forward, int v) {
  int start = -1;
  for (int d : m.darts_at(v))
    if (forward[d])
      start = d;
  std::vector<int> out;
  for (int d = m.next_ccw(start); !m.is_boundary_dart(d); d = m.next_ccw(d))
    out.push_back(d);
  return out;
}

} // namespace

Tangle tanglize(const LampBoard &board, bool strict) {
  const PlanarDiagram *mp = board.map();
  if (!mp || mp->surface() != SurfaceKind::disk)
    throw Error("not_a_pattern", "tanglize needs a crease pattern or disk diagram");
  const auto &m = *mp;
  const auto forward = forward_boundary(m);
  std::vector<std::vector<int>> inner(m.vertex_count());
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    int vi = static_cast<int>(v);
    if (m.is_boundary_vertex(vi)) {
      inner[v] = interior_darts(m, forward, vi);
      if (inner[v].size() > 3)
        throw Error("bad_contact", "boundary vertex " + std::to_string(v) + " has " +
                                       std::to_string(inner[v].size()) + " interior edges");
      if (strict && inner[v].size() == 1)
        throw Error("bad_contact", "boundary vertex " + std::to_string(v) + " has one interior edge");
    } else if (m.degree(vi) != 4 && m.degree(vi) != 2) {
      throw Error("not_tanglizable", "interior vertex " + std::to_string(v) + " has degree " +
                                         std::to_string(m.degree(vi)));
    }
  }

  // Next dart after running along d, or -1 where the strand stops.
  auto next = [&](int d) {
    int a = m.opposite(d);
    int w = m.vertex_of(a);
    if (!m.is_boundary_vertex(w)) {
      auto rot = m.darts_at(w);
      return m.degree(w) == 4 ? rot[(m.position(a) + 2) % 4] : rot[1 - m.position(a)];
    }
    const auto &in = inner[w];
    auto idx = std::find(in.begin(), in.end(), a) - in.begin();
    if (in.size() == 2)
      return in[1 - idx];
    if (in.size() == 3 && idx != 1)
      return in[2 - idx];
    return -1;
  };

  Tangle t;
  t.board = std::make_shared<const LampBoard>(board);
  t.edge_component.assign(m.edge_count(), -1);
  std::vector<TangleComponent> found;
  auto trace = [&](int start, bool closed) {
    TangleComponent c;
    c.closed = closed;
    int id = static_cast<int>(found.size());
    for (int d = start;;) {
      int e = m.edge_of(d);
      if (t.edge_component[e] >= 0)
        throw Error("internal", "strand revisits an edge");
      t.edge_component[e] = id;
      c.darts.push_back(d);
      d = next(d);
      if (d < 0) {
        if (closed)
          throw Error("internal", "closed strand stopped");
        break;
      }
      if (closed && d == start)
        break;
    }
    found.push_back(std::move(c));
  };

  std::vector<int> starts;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    if (inner[v].size() == 1)
      starts.push_back(inner[v][0]);
    else if (inner[v].size() == 3)
      starts.push_back(inner[v][1]);
  }
  std::sort(starts.begin(), starts.end());
  for (int s : starts)
    if (t.edge_component[m.edge_of(s)] < 0)
      trace(s, false);
  for (std::size_t d = 0; d < m.dart_count(); ++d)
    if (!m.is_boundary_dart(static_cast<int>(d)) && t.edge_component[m.edge_of(static_cast<int>(d))] < 0)
      trace(static_cast<int>(d), true);

  // Renumber by smallest dart id.
  std::vector<std::pair<int, int>> keys;
  for (std::size_t i = 0; i < found.size(); ++i) {
    int k = INT32_MAX;
    for (int d : found[i].darts)
      k = std::min({k, d, m.opposite(d)});
    keys.emplace_back(k, static_cast<int>(i));
  }
  std::sort(keys.begin(), keys.end());
  std::vector<int> renumber(found.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    renumber[keys[i].second] = static_cast<int>(i);
    t.components.push_back(std::move(found[keys[i].second]));
  }
  for (auto &c : t.edge_component)
    if (c >= 0)
      c = renumber[c];

  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    int vi = static_cast<int>(v);
    if (!m.is_boundary_vertex(vi) && m.degree(vi) == 4) {
      auto rot = m.darts_at(vi);
      t.crossings.push_back({vi, board.site_of_vertex(vi), t.edge_component[m.edge_of(rot[0])],
                             t.edge_component[m.edge_of(rot[1])]});
    } else if (inner[v].size() >= 2) {
      ContactPoint cp;
      cp.vertex = vi;
      cp.site = board.site_of_vertex(vi);
      cp.interior_edges = static_cast<int>(inner[v].size());
      cp.component = t.edge_component[m.edge_of(inner[v][0])];
      if (inner[v].size() == 3)
        cp.stopped = t.edge_component[m.edge_of(inner[v][1])];
      t.contacts.push_back(cp);
    }
  }
  return t;
}

std::vector<int> ReducibleCrossings::sorted() const {
  std::vector<int> idx(vertices.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    idx[i] = static_cast<int>(i);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return inner[a].size() > inner[b].size(); });
  return idx;
}

ReducibleCrossings reducible_poset(const PlanarDiagram &m) {
  ReducibleCrossings rc;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    int vi = static_cast<int>(v);
    if (m.is_boundary_vertex(vi) || m.degree(vi) != 4)
      continue;
    bool twice = false;
    for (const auto &r : m.regions())
      twice = twice || r.corner_count(vi) >= 2;
    if (!twice)
      continue;
    // Everything still connected to the sheet edge (or, on the sphere, to the
    // lowest other vertex) once v is removed is outside.
    std::vector<bool> seen(m.vertex_count(), false);
    std::deque<int> q;
    for (std::size_t u = 0; u < m.vertex_count(); ++u) {
      bool seed = m.surface() == SurfaceKind::disk ? m.is_boundary_vertex(static_cast<int>(u)) : q.empty() && u != v;
      if (seed && u != v) {
        seen[u] = true;
        q.push_back(static_cast<int>(u));
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int d : m.darts_at(u)) {
        int w = m.vertex_of(m.opposite(d));
        if (w != vi && !seen[w]) {
          seen[w] = true;
          q.push_back(w);
        }
      }
    }
    std::vector<int> in;
    for (std::size_t u = 0; u < m.vertex_count(); ++u)
      if (u != v && !seen[u])
        in.push_back(static_cast<int>(u));
    rc.vertices.push_back(vi);
    rc.inner.push_back(std::move(in));
  }
  for (std::size_t a = 0; a < rc.vertices.size(); ++a)
    for (std::size_t b = 0; b < rc.vertices.size(); ++b)
      if (a != b && std::binary_search(rc.inner[a].begin(), rc.inner[a].end(), rc.vertices[b]))
        rc.order.emplace_back(rc.vertices[a], rc.vertices[b]);
  return rc;
}

std::vector<int> mixed_sites(const Tangle &t, int k) {
  std::vector<int> out;
  for (const auto &c : t.crossings)
    if (c.site >= 0 && (c.first == k) != (c.second == k))
      out.push_back(c.site);
  for (const auto &c : t.contacts)
    if (c.site >= 0 && c.component == k)
      out.push_back(c.site);
  std::sort(out.begin(), out.end());
  return out;
}

LampLinking lamp_linking(const Tangle &t, int k, const BitVec &lamps) {
  if (k < 0 || static_cast<std::size_t>(k) >= t.components.size())
    throw Error("unknown_component", "component " + std::to_string(k) + " does not exist");
  if (!t.components[k].closed)
    throw Error("open_component", "lamp-linking number is defined for closed components only");
  LampLinking out;
  out.component = k;
  for (int s : mixed_sites(t, k)) {
    int f = lamps.get(s) ? 1 : -1;
    out.contributions.emplace_back(s, f);
    out.twice_value += f;
  }
  return out;
}

bool is_even_component(const Tangle &t, int k) {
  const auto sites = mixed_sites(t, k);
  for (const auto &r : t.map().regions()) {
    int count = 0;
    for (int s : sites)
      count += r.corner_count(t.board->sites[s]);
    if (count % 2)
      return false;
  }
  return true;
}

std::vector<int> even_components(const Tangle &t) {
  std::vector<int> out;
  for (std::size_t k = 0; k < t.components.size(); ++k)
    if (t.components[k].closed && is_even_component(t, static_cast<int>(k)))
      out.push_back(static_cast<int>(k));
  return out;
}

std::vector<int> parity_colouring(const PlanarDiagram &m, const std::vector<bool> &curve_edges, int start) {
  std::vector<std::vector<std::pair<int, int>>> adj(m.region_count());
  for (const auto &de : dual_graph(m)) {
    if (de.a < 0 || de.b < 0)
      continue;
    int flip = curve_edges[de.edge] ? 1 : 0;
    adj[de.a].emplace_back(de.b, flip);
    adj[de.b].emplace_back(de.a, flip);
  }
  std::vector<int> colour(m.region_count(), -1);
  colour[start] = 0;
  std::deque<int> q{start};
  while (!q.empty()) {
    int r = q.front();
    q.pop_front();
    for (auto [s, flip] : adj[r]) {
      int want = colour[r] ^ flip;
      if (colour[s] < 0) {
        colour[s] = want;
        q.push_back(s);
      } else if (colour[s] != want) {
        throw Error("no_colouring", "curve does not split the regions consistently");
      }
    }
  }
  for (auto &c : colour)
    if (c < 0)
      c = 0;
  return colour;
}

namespace {

int boundary_region(const PlanarDiagram &m) { return m.region_of(m.opposite(m.boundary_walk().front())); }

BitVec shaded_side(const PlanarDiagram &m, const std::vector<int> &darts) {
  std::vector<bool> curve(m.edge_count(), false);
  for (int d : darts)
    curve[m.edge_of(d)] = true;
  auto colour = parity_colouring(m, curve, boundary_region(m));
  BitVec x(m.region_count());
  for (std::size_t r = 0; r < colour.size(); ++r)
    x.set(r, colour[r] == 1);
  return x;
}

// Positions in the component's traversal where it arrives at v.
std::vector<std::size_t> arrivals(const PlanarDiagram &m, const TangleComponent &c, int v) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < c.darts.size(); ++j)
    if (m.vertex_of(m.opposite(c.darts[j])) == v)
      out.push_back(j);
  return out;
}

// The two closed curves obtained by splicing a closed component at v.
std::pair<std::vector<int>, std::vector<int>> splice(const PlanarDiagram &m, const TangleComponent &c, int v) {
  auto at = arrivals(m, c, v);
  if (at.size() != 2)
    throw Error("internal", "self-crossing visited " + std::to_string(at.size()) + " times");
  std::vector<int> a(c.darts.begin() + at[0] + 1, c.darts.begin() + at[1] + 1);
  std::vector<int> b(c.darts.begin() + at[1] + 1, c.darts.end());
  b.insert(b.end(), c.darts.begin(), c.darts.begin() + at[0] + 1);
  return {a, b};
}

const TangleCrossing &crossing_at_site(const Tangle &t, int site) {
  for (const auto &c : t.crossings)
    if (c.site == site)
      return c;
  throw Error("not_a_crossing", "lamp site " + std::to_string(site) + " is not a crossing of the tangle");
}

void expect_toggles(const Tangle &t, const BitVec &x, int site) {
  if (t.board->matrix.multiply(x) != BitVec::unit(t.board->site_count(), site))
    throw Error("internal", "construction does not toggle exactly site " + std::to_string(site));
}

} // namespace

BitVec reducible_correction(const Tangle &t, const ReducibleCrossings &rc, int index) {
  const auto &m = t.map();
  const int v = rc.vertices[index];
  const auto &in = rc.inner[index];
  auto inside = [&](int u) { return u == v || std::binary_search(in.begin(), in.end(), u); };
  // Edges of the cut-off lobe: reachable from v's inward darts without passing v.
  std::vector<bool> lobe_edge(m.edge_count(), false);
  std::deque<int> q;
  for (int d : m.darts_at(v)) {
    int u = m.vertex_of(m.opposite(d));
    if (u == v || (inside(u) && u != v))
      q.push_back(d);
  }
  while (!q.empty()) {
    int d = q.front();
    q.pop_front();
    int e = m.edge_of(d);
    if (lobe_edge[e])
      continue;
    lobe_edge[e] = true;
    int u = m.vertex_of(m.opposite(d));
    if (u != v)
      for (int f : m.darts_at(u))
        q.push_back(f);
  }
  std::vector<bool> lobe_region(m.region_count(), true);
  for (const auto &r : m.regions())
    for (int d : r.boundary_darts)
      if (!lobe_edge[m.edge_of(d)])
        lobe_region[r.id] = false;
  int corner = -1;
  for (const auto &r : m.regions())
    if (lobe_region[r.id] && r.corner_count(v) % 2 == 1)
      corner = r.id;
  if (corner < 0)
    throw Error("internal", "reducible crossing without a lobe corner");
  // Checkerboard inside the lobe, shading the corner region's class.
  BitVec x(m.region_count());
  std::vector<int> colour(m.region_count(), -1);
  colour[corner] = 1;
  q.assign({corner});
  std::vector<std::vector<int>> adj(m.region_count());
  for (const auto &de : dual_graph(m))
    if (de.a >= 0 && de.b >= 0 && lobe_region[de.a] && lobe_region[de.b]) {
      adj[de.a].push_back(de.b);
      adj[de.b].push_back(de.a);
    }
  while (!q.empty()) {
    int r = q.front();
    q.pop_front();
    x.set(r, colour[r] == 1);
    for (int s : adj[r])
      if (colour[s] < 0) {
        colour[s] = 1 - colour[r];
        q.push_back(s);
      }
  }
  return x;
}

BitVec constructive_changing_set(const Tangle &t, int site) {
  const auto &m = t.map();
  const auto &cr = crossing_at_site(t, site);
  const int v = cr.vertex;
  BitVec x;
  if (cr.self()) {
    const auto &comp = t.components[cr.first];
    if (comp.closed) {
      auto [a, b] = splice(m, comp, v);
      int smallest = *std::min_element(comp.darts.begin(), comp.darts.end());
      bool a_has = std::find(a.begin(), a.end(), smallest) != a.end();
      x = shaded_side(m, a_has ? b : a);
    } else {
      auto at = arrivals(m, comp, v);
      std::vector<int> lobe(comp.darts.begin() + at[0] + 1, comp.darts.begin() + at[1] + 1);
      x = shaded_side(m, lobe);
    }
  } else {
    const auto &ci = t.components[cr.first];
    const auto &cj = t.components[cr.second];
    if (ci.closed || cj.closed)
      throw Error("unchangeable", "crossing between a closed component and another component cannot be changed alone");
    auto ai = arrivals(m, ci, v), aj = arrivals(m, cj, v);
    std::vector<int> curve(ci.darts.begin(), ci.darts.begin() + ai[0] + 1);
    curve.insert(curve.end(), cj.darts.begin(), cj.darts.begin() + aj[0] + 1);
    x = shaded_side(m, curve);
  }
  // Sweep reducible crossings outer first.
  auto rc = reducible_poset(m);
  for (int idx : rc.sorted()) {
    int s = t.board->site_of_vertex(rc.vertices[idx]);
    if (s < 0 || s == site)
      continue;
    if (t.board->matrix.multiply(x).get(s))
      x ^= reducible_correction(t, rc, idx);
  }
  expect_toggles(t, x, site);
  return x;
}

BitVec single_contact_changing_set(const Tangle &t, int k, std::optional<int> self_crossing_site) {
  const auto &m = t.map();
  if (k < 0 || static_cast<std::size_t>(k) >= t.components.size() || !t.components[k].closed)
    throw Error("hypothesis", "component must be closed");
  const ContactPoint *contact = nullptr;
  int touches = 0;
  for (const auto &c : t.contacts)
    if (c.component == k) {
      ++touches;
      contact = &c;
    }
  if (touches != 1 || contact->interior_edges != 2)
    throw Error("hypothesis", "component must touch the sheet edge exactly once at a two-edge contact");
  BitVec base = shaded_side(m, t.components[k].darts);
  expect_toggles(t, base, contact->site);
  if (!self_crossing_site)
    return base;
  const auto &cr = crossing_at_site(t, *self_crossing_site);
  if (!cr.self() || cr.first != k)
    throw Error("hypothesis", "site is not a self-crossing of the component");
  auto [a, b] = splice(m, t.components[k], cr.vertex);
  int smallest = *std::min_element(t.components[k].darts.begin(), t.components[k].darts.end());
  bool a_has = std::find(a.begin(), a.end(), smallest) != a.end();
  BitVec x = shaded_side(m, a_has ? b : a);
  if (t.board->matrix.multiply(x).get(contact->site))
    x ^= base;
  expect_toggles(t, x, *self_crossing_site);
  return x;
}

nlohmann::json tangle_to_json(const Tangle &t) {
  const auto &m = t.map();
  nlohmann::json j;
  std::vector<std::string> names;
  int kc = 0, lc = 0;
  for (const auto &c : t.components)
    names.push_back(c.closed ? "K" + std::to_string(++kc) : "L" + std::to_string(++lc));
  auto &comps = j["components"] = nlohmann::json::array();
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    std::vector<int> path;
    for (int d : t.components[i].darts)
      path.push_back(m.vertex_of(d));
    if (!t.components[i].closed && !t.components[i].darts.empty())
      path.push_back(m.vertex_of(m.opposite(t.components[i].darts.back())));
    comps.push_back({{"id", i}, {"name", names[i]}, {"closed", t.components[i].closed}, {"vertices", path}});
  }
  auto &xs = j["crossings"] = nlohmann::json::array();
  for (const auto &c : t.crossings)
    xs.push_back({{"vertex", c.vertex}, {"site", c.site}, {"components", {c.first, c.second}}, {"self", c.self()}});
  auto &cs = j["contacts"] = nlohmann::json::array();
  for (const auto &c : t.contacts) {
    nlohmann::json e{{"vertex", c.vertex}, {"site", c.site}, {"interior_edges", c.interior_edges},
                     {"component", c.component}};
    if (c.stopped >= 0)
      e["stopped"] = c.stopped;
    cs.push_back(e);
  }
  auto rc = reducible_poset(m);
  j["reducible"] = {{"crossings", rc.vertices}, {"order", rc.order}};
  std::vector<std::string> even;
  for (int k : even_components(t))
    even.push_back(names[k]);
  j["even_components"] = even;
  auto &ll = j["lamp_linking"] = nlohmann::json::array();
  for (std::size_t k = 0; k < t.components.size(); ++k)
    if (t.components[k].closed) {
      auto r = lamp_linking(t, static_cast<int>(k), t.board->lamps);
      ll.push_back({{"component", names[k]}, {"value", r.value()}});
    }
  return j;
}

} // namespace regsel
