#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "regsel/board.hpp"

namespace regsel {

/// Immutable game state. Lamps are always initial ⊕ A·(history parity).
class GameInstance {
public:
  explicit GameInstance(LampBoard board);

  const LampBoard &board() const noexcept { return *board_; }
  const BitVec &lamps() const noexcept { return lamps_; }
  const std::vector<int> &history() const noexcept { return history_; }
  bool won() const { return lamps_.complement().none(); }

  GameInstance apply_rcc(int region) const;
  GameInstance apply_all(const std::vector<int> &regions) const;

private:
  std::shared_ptr<const LampBoard> board_;
  BitVec lamps_;
  std::vector<int> history_;
};

/// Solution or certificate. `regions` is set when solved, `certificate`
/// lists the rows whose sum is 0 = 1 otherwise.
struct GameAnswer {
  bool solved = false;
  BitVec regions;
  BitVec certificate;
};

/// Lamps toggled by selecting the regions in x.
BitVec toggled_sites(const LampBoard &b, const BitVec &x);

/// Regions lighting every lamp from the current state (minimum weight when
/// the search budget allows), verified by replay.
GameAnswer solve_game(const GameInstance &g, std::size_t budget = kDefaultWeightBudget);

/// Whether lamp site c alone can be toggled; the witness toggles only c.
GameAnswer changeable(const LampBoard &b, int site, std::size_t budget = kDefaultWeightBudget);

std::vector<BitVec> ineffective_sets(const LampBoard &b);

/// Region set toggling only `site`, avoiding `prohibited`, containing
/// `compulsory`.
std::optional<BitVec> constrained_changing_set(const LampBoard &b, int site, const std::vector<int> &prohibited,
                                               const std::vector<int> &compulsory);

/// Ineffective set avoiding `prohibited` and containing `compulsory`;
/// non-empty whenever the constraints allow one.
std::optional<BitVec> constrained_ineffective_set(const LampBoard &b, const std::vector<int> &prohibited,
                                                  const std::vector<int> &compulsory);

/// {R1} ⊕ S_1 ⊕ … ⊕ S_n where S_i toggles only the i-th site with odd
/// corner count on R1 while avoiding R1 and R2. The result is ineffective,
/// contains R1 and avoids R2.
std::optional<BitVec> symmetric_difference_ineffective(const LampBoard &b, int r1, int r2);

/// A set T toggling only `site`, fixed up with the symmetric-difference
/// ineffective sets for (r1, r2) and (r2, r1) so that it contains r1 and
/// avoids r2.
std::optional<BitVec> compulsory_changing_set(const LampBoard &b, int site, int r1, int r2);

} // namespace regsel
