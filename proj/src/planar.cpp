#include "regsel/planar.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "regsel/error.hpp"

namespace regsel {

int Region::corner_count(int vertex) const {
  auto it = std::lower_bound(corners.begin(), corners.end(), std::pair{vertex, 0});
  return (it != corners.end() && it->first == vertex) ? it->second : 0;
}

PlanarDiagram::PlanarDiagram(std::vector<std::vector<int>> rotations, std::vector<int> opposite,
                             SurfaceKind kind, std::vector<int> boundary_walk)
    : kind_(kind), rotations_(std::move(rotations)), opposite_(std::move(opposite)),
      boundary_walk_(std::move(boundary_walk)) {
  const auto n = opposite_.size();
  vertex_of_.assign(n, -1);
  position_.assign(n, -1);
  for (std::size_t v = 0; v < rotations_.size(); ++v) {
    for (std::size_t p = 0; p < rotations_[v].size(); ++p) {
      int d = rotations_[v][p];
      if (d < 0 || static_cast<std::size_t>(d) >= n || vertex_of_[d] != -1)
        throw Error("bad_rotation", "dart " + std::to_string(d) + " is missing or listed twice");
      vertex_of_[d] = static_cast<int>(v);
      position_[d] = static_cast<int>(p);
    }
  }
  for (std::size_t d = 0; d < n; ++d) {
    if (vertex_of_[d] < 0)
      throw Error("bad_rotation", "dart " + std::to_string(d) + " belongs to no vertex");
    int o = opposite_[d];
    if (o < 0 || static_cast<std::size_t>(o) >= n || o == static_cast<int>(d) ||
        opposite_[o] != static_cast<int>(d))
      throw Error("bad_involution", "opposite is not a fixed-point-free involution at dart " +
                                        std::to_string(d));
  }

  edge_of_.assign(n, -1);
  for (std::size_t d = 0; d < n; ++d) {
    if (edge_of_[d] >= 0)
      continue;
    int e = static_cast<int>(edge_darts_.size());
    edge_darts_.emplace_back(static_cast<int>(d), opposite_[d]);
    edge_of_[d] = e;
    edge_of_[opposite_[d]] = e;
  }

  boundary_dart_.assign(n, false);
  boundary_vertex_.assign(rotations_.size(), false);
  if (kind_ == SurfaceKind::disk && boundary_walk_.empty())
    throw Error("bad_boundary", "disk diagram needs a boundary walk");
  for (int d : boundary_walk_) {
    boundary_dart_[d] = true;
    boundary_dart_[opposite_[d]] = true;
    boundary_vertex_[vertex_of_[d]] = true;
  }

  // Face tracing.
  std::vector<int> face(n, -1);
  std::vector<std::vector<int>> cycles;
  for (std::size_t s = 0; s < n; ++s) {
    if (face[s] >= 0)
      continue;
    std::vector<int> cyc;
    int d = static_cast<int>(s);
    while (face[d] < 0) {
      face[d] = static_cast<int>(cycles.size());
      cyc.push_back(d);
      d = next_ccw(opposite_[d]);
    }
    cycles.push_back(std::move(cyc));
  }

  int outer = -1;
  if (kind_ == SurfaceKind::disk) {
    outer = face[boundary_walk_.front()];
    for (int d : boundary_walk_)
      if (face[d] != outer)
        throw Error("bad_boundary", "boundary walk does not trace a single outside face");
    if (cycles[outer].size() != boundary_walk_.size())
      throw Error("bad_boundary", "outside face contains non-boundary darts");
  }

  // Connected components (vertices joined by edges).
  std::vector<int> parent(rotations_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edge_darts_)
    parent[find(vertex_of_[a])] = find(vertex_of_[b]);
  for (std::size_t v = 0; v < rotations_.size(); ++v)
    if (find(static_cast<int>(v)) == static_cast<int>(v))
      ++components_;
  if (kind_ == SurfaceKind::disk && components_ != 1)
    throw Error("disconnected", "disk diagram must be connected to the sheet boundary");

  // Split sphere diagrams: each component is traced on its own sphere. The
  // pieces are drawn side by side, so the largest face of every component
  // (ties to the smallest dart) is one shared region.
  std::vector<int> alias(cycles.size());
  std::iota(alias.begin(), alias.end(), 0);
  if (kind_ == SurfaceKind::sphere && components_ > 1) {
    std::vector<int> best(rotations_.size(), -1);
    for (std::size_t f = 0; f < cycles.size(); ++f) {
      int root = find(vertex_of_[cycles[f].front()]);
      int &b = best[root];
      auto smallest = [&](int g) { return *std::min_element(cycles[g].begin(), cycles[g].end()); };
      if (b < 0 || cycles[f].size() > cycles[b].size() ||
          (cycles[f].size() == cycles[b].size() && smallest(static_cast<int>(f)) < smallest(b)))
        b = static_cast<int>(f);
    }
    int shared = -1;
    for (int b : best)
      if (b >= 0) {
        if (shared < 0)
          shared = b;
        alias[b] = shared;
      }
  }

  region_of_.assign(n, -1);
  std::vector<int> face_region(cycles.size(), -1);
  for (std::size_t f = 0; f < cycles.size(); ++f) {
    if (static_cast<int>(f) == outer)
      continue;
    int target = alias[f];
    if (face_region[target] < 0) {
      face_region[target] = static_cast<int>(regions_.size());
      regions_.push_back(Region{static_cast<int>(regions_.size()), {}, {}});
    }
    Region &r = regions_[face_region[target]];
    for (int d : cycles[f]) {
      r.boundary_darts.push_back(d);
      region_of_[d] = r.id;
      int v = vertex_of_[d];
      auto it = std::lower_bound(r.corners.begin(), r.corners.end(), std::pair{v, 0});
      if (it != r.corners.end() && it->first == v)
        ++it->second;
      else
        r.corners.insert(it, {v, 1});
    }
  }

  const long V = static_cast<long>(rotations_.size());
  const long E = static_cast<long>(edge_darts_.size());
  const long F = static_cast<long>(regions_.size()) + (outer >= 0 ? 1 : 0);
  if (V > 0 && V - E + F != 1 + static_cast<long>(components_))
    throw Error("not_planar", "Euler check failed: V - E + F = " + std::to_string(V - E + F) +
                                  " for " + std::to_string(components_) + " component(s)");
}

int PlanarDiagram::next_ccw(int d) const {
  const auto &rot = rotations_[vertex_of_[d]];
  return rot[(position_[d] + 1) % rot.size()];
}

int PlanarDiagram::prev_ccw(int d) const {
  const auto &rot = rotations_[vertex_of_[d]];
  return rot[(position_[d] + rot.size() - 1) % rot.size()];
}

int PlanarDiagram::interior_degree(int v) const {
  int k = 0;
  for (int d : rotations_[v])
    if (!boundary_dart_[d])
      ++k;
  return k;
}

int PlanarDiagram::corner_region(int v, int position) const {
  const auto &rot = rotations_[v];
  const int deg = static_cast<int>(rot.size());
  return region_of_[rot[((position % deg) + deg) % deg]];
}

std::vector<DualEdge> dual_graph(const PlanarDiagram &d) {
  std::vector<DualEdge> out;
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    if (d.is_boundary_edge(static_cast<int>(e)))
      continue;
    auto [x, y] = d.edge_darts(static_cast<int>(e));
    out.push_back({static_cast<int>(e), d.region_of(x), d.region_of(y)});
  }
  return out;
}

std::vector<int> checkerboard(const PlanarDiagram &d) {
  const auto n = d.region_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto &de : dual_graph(d)) {
    if (de.a < 0 || de.b < 0)
      continue;
    if (de.a == de.b)
      throw Error("no_checkerboard", "edge " + std::to_string(de.edge) +
                                         " has the same region on both sides");
    adj[de.a].push_back(de.b);
    adj[de.b].push_back(de.a);
  }
  std::vector<int> color(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] >= 0)
      continue;
    color[s] = 0;
    std::deque<int> q{static_cast<int>(s)};
    while (!q.empty()) {
      int r = q.front();
      q.pop_front();
      for (int t : adj[r]) {
        if (color[t] < 0) {
          color[t] = 1 - color[r];
          q.push_back(t);
        } else if (color[t] == color[r]) {
          throw Error("no_checkerboard", "regions admit no proper two-colouring");
        }
      }
    }
  }
  return color;
}

} // namespace regsel
