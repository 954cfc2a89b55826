#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "regsel/planar.hpp"

namespace regsel {

/// One crossing in PD form: edge labels counterclockwise starting at the
/// incoming under-strand. `over_in` is the position (1 or 3) where the over
/// strand enters.
struct PdCrossing {
  std::array<int, 4> edges{};
  int over_in = 3;

  int over_out() const noexcept { return 4 - over_in; }
  /// +1 when the over strand runs from position 3 to position 1.
  int sign() const noexcept { return over_in == 3 ? 1 : -1; }
  friend bool operator==(const PdCrossing &, const PdCrossing &) = default;
};

/// Oriented link diagram on the sphere. Crossing i is vertex i of the
/// underlying map, its dart at PD position p is 4*i + p. Crossing-free
/// components are kept as `free_loops`; each occupies one degree-2 vertex
/// after the crossings.
class LinkDiagram {
public:
  LinkDiagram() : LinkDiagram(std::vector<PdCrossing>{}, 0) {}
  /// Takes crossings with explicit over-strand directions and validates that
  /// every label has exactly one incoming and one outgoing end.
  LinkDiagram(std::vector<PdCrossing> crossings, int free_loops);

  /// Builds from bare PD tuples, deriving strand orientation: components
  /// with an under-passage follow it; all-over components run towards
  /// increasing labels where possible.
  static LinkDiagram from_pd(const std::vector<std::array<int, 4>> &tuples, int free_loops = 0);

  /// Closure of a braid word on `strands` strands; generator k (1-based)
  /// crosses positions k and k+1, positive k gives a positive crossing.
  static LinkDiagram from_braid(const std::vector<int> &word, int strands);

  const std::vector<PdCrossing> &crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int free_loops() const noexcept { return free_loops_; }
  const PlanarDiagram &map() const noexcept { return map_; }

  /// Components, each as its labels in orientation order. Free loops come
  /// last with no labels.
  const std::vector<std::vector<int>> &components() const noexcept { return components_; }
  int component_count() const noexcept { return static_cast<int>(components_.size()); }
  int component_of_label(int label) const;
  int under_component(int x) const { return component_of_label(crossings_[x].edges[0]); }
  int over_component(int x) const { return component_of_label(crossings_[x].edges[1]); }
  bool is_self_crossing(int x) const { return under_component(x) == over_component(x); }

  int label_of_edge(int e) const { return edge_label_[e]; }
  int edge_of_label(int label) const;
  /// Label at a crossing position, as a map dart.
  static int dart(int crossing, int position) noexcept { return 4 * crossing + position; }

  /// Sum of signs of crossings between components i and j, halved.
  int linking_number(int i, int j) const;

  /// Diagram with the given crossings switched (over becomes under).
  LinkDiagram with_changes(const std::vector<int> &xs) const;
  /// Same crossings relabelled 1..2n along components in orientation order.
  LinkDiagram canonical() const;
  int max_label() const;

  /// PD text, one `X(a,b,c,d)` per line and one `O` per free loop.
  std::string to_pd() const;

private:
  void build();

  std::vector<PdCrossing> crossings_;
  int free_loops_ = 0;
  PlanarDiagram map_;
  std::vector<int> edge_label_;
  std::vector<std::pair<int, int>> label_index_; // sorted (label, edge id)
  std::vector<std::vector<int>> components_;
  std::vector<std::pair<int, int>> label_component_; // sorted (label, component)
};

/// Parses PD text: `X(a,b,c,d)` or `X[a,b,c,d]` tuples (several per line
/// allowed), `O` lines for crossing-free components, `#` comments.
LinkDiagram parse_pd(std::string_view text);

} // namespace regsel
