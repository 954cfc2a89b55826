#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace regsel {

enum class SurfaceKind { sphere, disk };

/// A region (face) of a planar map. Corners are stored as (vertex, count)
/// pairs sorted by vertex.
struct Region {
  int id = -1;
  std::vector<int> boundary_darts;
  std::vector<std::pair<int, int>> corners;

  int corner_count(int vertex) const;
  bool touches(int vertex) const { return corner_count(vertex) > 0; }
};

/// Combinatorial map. Darts are half-edges leaving a vertex; each vertex
/// lists its darts in counterclockwise order. Faces are the orbits of
/// d -> next_ccw(opposite(d)), which keeps the face on the right of each dart.
///
/// Disk diagrams carry the sheet boundary as ordinary edges; `boundary_walk`
/// lists the boundary darts running counterclockwise along the sheet edge.
/// The face traced by those darts is the outside of the sheet and is not a
/// region.
class PlanarDiagram {
public:
  PlanarDiagram() = default;

  /// Builds the map from per-vertex counterclockwise dart lists and the dart
  /// pairing. Validates the involution, traces faces and checks the Euler
  /// characteristic; throws regsel::Error on violation.
  PlanarDiagram(std::vector<std::vector<int>> rotations, std::vector<int> opposite, SurfaceKind kind,
                std::vector<int> boundary_walk = {});

  SurfaceKind surface() const noexcept { return kind_; }
  std::size_t dart_count() const noexcept { return opposite_.size(); }
  std::size_t vertex_count() const noexcept { return rotations_.size(); }
  std::size_t edge_count() const noexcept { return edge_darts_.size(); }
  std::size_t component_count() const noexcept { return components_; }

  int opposite(int d) const { return opposite_[d]; }
  int next_ccw(int d) const;
  int prev_ccw(int d) const;
  int vertex_of(int d) const { return vertex_of_[d]; }
  int position(int d) const { return position_[d]; }
  int edge_of(int d) const { return edge_of_[d]; }
  /// The two darts of an edge; first is the smaller id.
  std::pair<int, int> edge_darts(int e) const { return edge_darts_[e]; }
  std::span<const int> darts_at(int v) const { return rotations_[v]; }
  int degree(int v) const { return static_cast<int>(rotations_[v].size()); }

  const std::vector<int> &boundary_walk() const noexcept { return boundary_walk_; }
  bool is_boundary_dart(int d) const { return boundary_dart_[d]; }
  bool is_boundary_edge(int e) const { return boundary_dart_[edge_darts_[e].first]; }
  bool is_boundary_vertex(int v) const { return boundary_vertex_[v]; }
  /// Number of non-boundary edges at a vertex.
  int interior_degree(int v) const;

  const std::vector<Region> &regions() const noexcept { return regions_; }
  std::size_t region_count() const noexcept { return regions_.size(); }
  /// Region containing the dart, or -1 for the outside face of a disk.
  int region_of(int d) const { return region_of_[d]; }
  /// Region of the corner between darts position-1 and position at the vertex.
  int corner_region(int v, int position) const;

  /// Total faces including the outside face of a disk.
  std::size_t face_count() const noexcept { return regions_.size() + (kind_ == SurfaceKind::disk ? 1 : 0); }

private:
  SurfaceKind kind_ = SurfaceKind::sphere;
  std::vector<std::vector<int>> rotations_;
  std::vector<int> opposite_;
  std::vector<int> vertex_of_;
  std::vector<int> position_;
  std::vector<int> edge_of_;
  std::vector<std::pair<int, int>> edge_darts_;
  std::vector<int> boundary_walk_;
  std::vector<bool> boundary_dart_;
  std::vector<bool> boundary_vertex_;
  std::vector<Region> regions_;
  std::vector<int> region_of_;
  std::size_t components_ = 0;
};

struct DualEdge {
  int edge = -1;
  int a = -1;
  int b = -1;
};

/// One dual edge per non-boundary edge, joining the regions on its two sides
/// (a == b for an edge with the same region on both sides).
std::vector<DualEdge> dual_graph(const PlanarDiagram &d);

/// Proper two-colouring of the regions across non-boundary edges; colour 0
/// goes to region 0's class. Throws when no proper colouring exists.
std::vector<int> checkerboard(const PlanarDiagram &d);

} // namespace regsel
