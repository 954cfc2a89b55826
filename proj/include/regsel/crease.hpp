#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "regsel/planar.hpp"

namespace regsel {

/// Exact rational coordinate as numerator/denominator, present when the
/// input gave the coordinate as a "p/q" string.
struct Rational {
  long long num = 0;
  long long den = 1;
};

struct Point {
  double x = 0;
  double y = 0;
  std::optional<Rational> exact_x;
  std::optional<Rational> exact_y;
  bool exact() const noexcept { return exact_x.has_value() && exact_y.has_value(); }
};

inline constexpr double kCoordTolerance = 1e-9;

/// Crease pattern on the unit square, pre-subdivided so creases meet only at
/// vertices. Map vertex ids are indices into `vertices`; sheet corners and
/// boundary edges are added automatically.
struct CreasePattern {
  std::vector<Point> vertices;
  std::vector<std::pair<int, int>> creases;
  PlanarDiagram map;
  /// Counterclockwise sector angles in degrees per vertex (empty on ∂S).
  std::vector<std::vector<double>> sector_angles;
  std::vector<bool> sheet_corner;

  bool on_boundary(int v) const { return map.is_boundary_vertex(v); }
};

CreasePattern make_crease_pattern(std::vector<Point> vertices, std::vector<std::pair<int, int>> creases);

/// Reads the FOLD subset: `vertices_coords`, `edges_vertices`, optional
/// `edges_assignment` where "B" marks sheet-boundary edges (skipped).
CreasePattern parse_fold(const nlohmann::json &fold);
CreasePattern parse_fold_text(const std::string &text);

/// Combinatorial disk diagram given by PD-style crossings plus the list of
/// edge labels met along the sheet boundary counterclockwise. A boundary
/// entry is either one label (an endpoint) or a list of labels in
/// counterclockwise order at one boundary vertex (a contact).
struct DiskPd {
  std::vector<std::vector<int>> crossings; // each of size 4, counterclockwise
  std::vector<std::vector<int>> boundary;
};

/// Result of realising a DiskPd: crossing i is vertex i, boundary entry j is
/// vertex crossings.size() + j.
struct DiskDiagram {
  PlanarDiagram map;
  std::vector<int> edge_label; // per map edge, -1 on sheet boundary
};

DiskDiagram make_disk_diagram(const DiskPd &pd);
DiskPd parse_disk_pd(const nlohmann::json &j);

} // namespace regsel
