#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "regsel/gf2.hpp"
#include "regsel/link.hpp"

namespace regsel {

/// One Reidemeister reduction or slide, identified by edge labels of the
/// diagram it applies to: R1 by its loop label, R2 by the two bigon labels,
/// R3 by the three triangle labels.
struct Move {
  enum class Kind { r1, r2, r3 } kind = Kind::r1;
  std::vector<int> labels;
  int crossings_after = 0;
};

/// Moves taking the diagram to a crossing-free one, or `trivial == false`
/// when the search gave up (the diagram may still be trivial).
struct TrivialityCertificate {
  bool trivial = false;
  std::vector<Move> moves;
};

inline constexpr int kR3SearchDepth = 6;

LinkDiagram apply_move(const LinkDiagram &d, const Move &m);
std::vector<Move> available_moves(const LinkDiagram &d, Move::Kind kind);

/// Greedy R1/R2 removal; when stuck, a bounded search over R3 slides for a
/// state admitting a removal. Total moves are capped at 10·c(D) (at least 10).
TrivialityCertificate simplify(const LinkDiagram &d, int r3_depth = kR3SearchDepth);
/// Replays the moves and returns the final crossing count.
int replay(const LinkDiagram &d, const TrivialityCertificate &cert);

/// |det| of the Goeritz matrix (the link determinant); nullopt for split
/// or crossing-free diagrams.
std::optional<long long> link_determinant(const LinkDiagram &d);
/// True when a cheap invariant already shows the link is not trivial:
/// a nonzero pairwise linking number, or a determinant that differs from
/// the trivial link's.
bool obviously_nontrivial(const LinkDiagram &d);

struct ProperReport {
  std::vector<int> linking_sums; // per component: Σ_j lk(K_i, K_j)
  std::vector<bool> component_proper;
  bool proper = true;
};
ProperReport proper_link_check(const LinkDiagram &d);

/// A place where the circle crosses the diagram: the edge with PD label
/// `label` (negative for free loops), at parameter t in (0, 1) along its
/// orientation, crossing from its right face to its left (`side` = +1) or
/// from left to right (-1).
struct Transit {
  int label = 0;
  double t = 0.5;
  int side = 1;
  friend bool operator==(const Transit &, const Transit &) = default;
};

/// A simple closed curve transverse to the diagram, as the cyclic list of
/// transits met in order. Its left side is north. An empty list is a circle
/// inside one region: plain RCC.
struct CirclePlacement {
  std::vector<Transit> transits;
};

/// D ∪ C as a planar map. Vertices 0..V-1 are those of D, transit i is
/// vertex V + i. The incidence matrix has one row per crossing of D and one
/// column per region of D ∪ C.
struct SplitDiagram {
  PlanarDiagram map;
  std::vector<int> region_side;   // 0 north, 1 south
  std::vector<int> crossing_side; // per crossing of D
  Gf2Matrix incidence;
  std::vector<int> side_region_count() const;
};

SplitDiagram split_by_circle(const LinkDiagram &d, const CirclePlacement &c);
/// Fills in transit sides when they are omitted (side == 0), choosing the
/// first consistent assignment.
CirclePlacement infer_sides(const LinkDiagram &d, CirclePlacement c);

/// Circle around a chain of vertices (crossings or free-loop vertices),
/// consecutive ones joined by shortest dual paths. A single crossing gives
/// the small circle crossing its four edges.
CirclePlacement neighborhood_circle(const LinkDiagram &d, const std::vector<int> &sites);
/// Circle around crossings that all have a corner in one region, joined
/// inside that region. Tries every order of the sites.
CirclePlacement star_circle(const LinkDiagram &d, const std::vector<int> &sites);

/// Moves crossing c along a dual path (the edge labels crossed, starting in
/// a region at c). Each transit adds four crossings where c's strands pass
/// over the crossed arc.
LinkDiagram spur_move(const LinkDiagram &d, int c, const std::vector<int> &path_labels);
/// Spurs crossings xs[1..] one at a time into the region at a corner of
/// xs[0], then places a star circle around all of them there.
struct Gathered {
  LinkDiagram diagram;
  CirclePlacement circle;
  int region = -1;
};
Gathered gather_crossings(const LinkDiagram &d, const std::vector<int> &xs);

/// Shortest dual path from a region at c to `target` avoiding c's own edges.
std::vector<int> dual_path_to_region(const LinkDiagram &d, int c, int target_region);

struct UnlinkResult {
  std::optional<int> count;       // upper bound; nullopt if nothing certified within budget
  std::vector<int> witness;       // crossings changed, or regions selected
  std::vector<int> changed;       // crossings changed by the witness
  TrivialityCertificate certificate;
};

/// Searches crossing subsets by size; certified results only.
UnlinkResult classical_unlink_number(const LinkDiagram &d, int budget);
/// Region subsets of D ∪ C by size.
UnlinkResult circled_unlink_number(const LinkDiagram &d, const CirclePlacement &c, int budget);

/// Empty circle, small circles at each crossing, and neighbourhood circles
/// of 2 and 3 crossings whose joining dual paths total at most 6 edges.
std::vector<CirclePlacement> circle_family(const LinkDiagram &d, int max_path = 6);

struct CircledSearch {
  UnlinkResult best;
  CirclePlacement circle;
  std::size_t circles_tried = 0;
};
CircledSearch circled_unlink_number_over_circles(const LinkDiagram &d, const std::vector<CirclePlacement> &family,
                                                 int budget);

nlohmann::json certificate_to_json(const TrivialityCertificate &c);
nlohmann::json circle_to_json(const CirclePlacement &c);
CirclePlacement circle_from_json(const nlohmann::json &j);

} // namespace regsel
