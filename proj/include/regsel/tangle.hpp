#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "regsel/board.hpp"

namespace regsel {

/// A strand of a tanglized pattern. `darts` lists the traversal in order;
/// dart d runs from vertex_of(d) to vertex_of(opposite(d)).
struct TangleComponent {
  bool closed = false;
  std::vector<int> darts;
};

struct TangleCrossing {
  int vertex = -1;
  int site = -1;   // lamp site id on the board
  int first = -1;  // component through positions 0 and 2
  int second = -1; // component through positions 1 and 3
  bool self() const { return first == second; }
};

/// Boundary vertex with 2 or 3 interior edges. `component` runs through it
/// (the side edges for 3), `stopped` ends at the centre edge (3 only).
struct ContactPoint {
  int vertex = -1;
  int site = -1;
  int interior_edges = 0;
  int component = -1;
  int stopped = -1;
};

struct Tangle {
  std::shared_ptr<const LampBoard> board;
  std::vector<TangleComponent> components;
  std::vector<int> edge_component; // per map edge, -1 on the sheet boundary
  std::vector<TangleCrossing> crossings;
  std::vector<ContactPoint> contacts;

  const PlanarDiagram &map() const { return *board->map(); }
  bool is_contact_tangle() const { return !contacts.empty(); }
};

/// Strand tracing on a disk board. Interior vertices must have degree 4 (or
/// 2, a bend). At boundary vertices: one interior edge is an endpoint, two
/// continue on the other edge, three continue side to side and stop on the
/// centre edge. With `strict`, single-edge boundary vertices are rejected.
/// Components are numbered by their smallest dart id.
Tangle tanglize(const LampBoard &board, bool strict = false);

struct ReducibleCrossings {
  std::vector<int> vertices;                // reducible crossings
  std::vector<std::vector<int>> inner;      // per reducible crossing: vertices cut off from the sheet edge
  std::vector<std::pair<int, int>> order;   // (a, b) meaning a ⪯ b: b lies in the inner part of a
  std::vector<int> sorted() const;          // a linear extension, outer crossings first
};

/// A crossing is reducible when a region touches it twice.
ReducibleCrossings reducible_poset(const PlanarDiagram &map);

/// Lamp sites where closed component k meets another component, plus its
/// contact points.
std::vector<int> mixed_sites(const Tangle &t, int k);

struct LampLinking {
  int component = -1;
  int twice_value = 0; // 2 l(K)
  std::vector<std::pair<int, int>> contributions; // (site, f)
  double value() const { return twice_value / 2.0; }
};

LampLinking lamp_linking(const Tangle &t, int k, const BitVec &lamps);

bool is_even_component(const Tangle &t, int k);
std::vector<int> even_components(const Tangle &t);

/// Regions coloured by parity of crossings of `curve_edges` along dual paths,
/// 0 on `start`. Throws if the edges do not bound a consistent 2-colouring.
std::vector<int> parity_colouring(const PlanarDiagram &map, const std::vector<bool> &curve_edges, int start);

/// Region set toggling only the inner crossing of a reducible crossing.
BitVec reducible_correction(const Tangle &t, const ReducibleCrossings &rc, int index);

/// Changing set for a changeable crossing site built by hand: splice or cut
/// at c, shade one side of the resulting curve, then sweep the reducible
/// crossings outer first. Verified against A·x = e_c.
BitVec constructive_changing_set(const Tangle &t, int site);

/// Changing set for the contact lamp, or for a self-crossing site of K, on a
/// closed component touching the sheet edge once at a two-edge contact.
BitVec single_contact_changing_set(const Tangle &t, int k, std::optional<int> self_crossing_site = {});

nlohmann::json tangle_to_json(const Tangle &t);

} // namespace regsel
