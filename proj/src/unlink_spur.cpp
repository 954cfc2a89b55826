#include <algorithm>

#include "regsel/error.hpp"
#include "regsel/unlink.hpp"

namespace regsel {

namespace {

bool incoming(const PdCrossing &c, int p) { return p == 0 || p == c.over_in; }

int tail_of(const LinkDiagram &d, int label) {
  const int n = d.crossing_count();
  if (label < 0)
    return 4 * n + 2 * (-1 - label);
  auto [a, b] = d.map().edge_darts(d.edge_of_label(label));
  return incoming(d.crossings()[a / 4], a % 4) ? b : a;
}

} // namespace

LinkDiagram spur_move(const LinkDiagram &d, int c, const std::vector<int> &path) {
  const int n = d.crossing_count();
  if (c < 0 || c >= n)
    throw Error("unknown_crossing", "crossing " + std::to_string(c) + " out of range");
  if (path.empty())
    return d;
  const auto &m = d.map();
  auto faces = [&](int label) {
    int t = tail_of(d, label);
    return std::pair{m.region_of(t), m.region_of(m.opposite(t))};
  };
  for (int label : path) {
    if (label > 0) {
      auto [a, b] = m.edge_darts(d.edge_of_label(label));
      if (a / 4 == c || b / 4 == c)
        throw Error("bad_path", "path crosses an edge at the moving crossing");
    }
  }

  // Leading corner (i, i+1) faces the first crossed edge.
  auto [r0, l0] = faces(path.front());
  int region = -1, lead = -1;
  for (int i = 0; i < 4 && lead < 0; ++i) {
    int r = m.region_of(LinkDiagram::dart(c, (i + 1) % 4));
    if (r == r0 || r == l0) {
      region = r;
      lead = i;
    }
  }
  if (lead < 0)
    throw Error("bad_path", "path does not start in a region at the crossing");

  auto xs = d.crossings();
  int loops = d.free_loops();
  int fresh = d.max_label() + 1;
  for (int label : path) {
    auto [rf, lf] = faces(label);
    bool on_right;
    if (region == rf)
      on_right = true;
    else if (region == lf)
      on_right = false;
    else
      throw Error("bad_path", "path is not a walk in the dual graph");
    region = on_right ? lf : rf;

    // Pieces of the crossed arc, in its direction.
    int piece[5];
    if (label > 0) {
      piece[0] = label;
      for (int k = 1; k < 5; ++k)
        piece[k] = fresh++;
      bool done = false;
      for (auto &x : xs)
        for (int p = 0; p < 4 && !done; ++p)
          if (x.edges[p] == label && incoming(x, p)) {
            x.edges[p] = piece[4];
            done = true;
          }
    } else {
      --loops;
      for (int k = 0; k < 4; ++k)
        piece[k] = fresh++;
      piece[4] = piece[0];
    }

    const int i = lead;
    const int order_right[4] = {(i + 1) % 4, (i + 2) % 4, (i + 3) % 4, i};
    const int order_left[4] = {i, (i + 3) % 4, (i + 2) % 4, (i + 1) % 4};
    for (int k = 0; k < 4; ++k) {
      int j = on_right ? order_right[k] : order_left[k];
      int tail = xs[c].edges[j];
      bool into_c = incoming(xs[c], j);
      int near = fresh++;
      xs[c].edges[j] = near;
      PdCrossing nx;
      nx.edges[0] = piece[k];
      nx.edges[2] = piece[k + 1];
      if (on_right) {
        nx.edges[1] = tail;
        nx.edges[3] = near;
        nx.over_in = into_c ? 1 : 3;
      } else {
        nx.edges[1] = near;
        nx.edges[3] = tail;
        nx.over_in = into_c ? 3 : 1;
      }
      xs.push_back(nx);
    }
  }
  return LinkDiagram(std::move(xs), loops);
}

} // namespace regsel

namespace regsel {

Gathered gather_crossings(const LinkDiagram &d, const std::vector<int> &xs) {
  if (xs.empty())
    return {d, {}, -1};
  Gathered g{d, {}, -1};
  const int anchor = xs.front();
  // Try each corner of the anchor until every crossing reaches it.
  for (int q = 0; q < 4; ++q) {
    LinkDiagram cur = d;
    bool ok = true;
    for (std::size_t k = 1; k < xs.size() && ok; ++k) {
      int target = cur.map().region_of(LinkDiagram::dart(anchor, q));
      try {
        cur = spur_move(cur, xs[k], dual_path_to_region(cur, xs[k], target));
      } catch (const Error &) {
        ok = false;
      }
    }
    if (!ok)
      continue;
    try {
      g.circle = star_circle(cur, xs);
    } catch (const Error &) {
      continue;
    }
    g.diagram = std::move(cur);
    g.region = g.diagram.map().region_of(LinkDiagram::dart(anchor, q));
    return g;
  }
  throw Error("bad_circle", "could not gather the crossings into one region");
}

} // namespace regsel
