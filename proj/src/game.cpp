#include "regsel/game.hpp"

#include "regsel/error.hpp"

namespace regsel {

namespace {

void check_region(const LampBoard &b, int r) {
  if (r < 0 || static_cast<std::size_t>(r) >= b.region_count())
    throw Error("unknown_region", "region " + std::to_string(r) + " does not exist");
}

void check_site(const LampBoard &b, int s) {
  if (s < 0 || static_cast<std::size_t>(s) >= b.site_count())
    throw Error("unknown_site", "lamp site " + std::to_string(s) + " does not exist");
}

std::vector<std::size_t> to_columns(const LampBoard &b, const std::vector<int> &regions) {
  std::vector<std::size_t> out;
  for (int r : regions) {
    check_region(b, r);
    out.push_back(static_cast<std::size_t>(r));
  }
  return out;
}

// Every witness goes through here before it leaves the module.
void verify(const LampBoard &b, const BitVec &x, const BitVec &target) {
  if (toggled_sites(b, x) != target)
    throw Error("internal", "witness failed replay");
}

} // namespace

GameInstance::GameInstance(LampBoard board)
    : board_(std::make_shared<const LampBoard>(std::move(board))), lamps_(board_->lamps) {}

GameInstance GameInstance::apply_rcc(int region) const {
  check_region(*board_, region);
  GameInstance next = *this;
  for (std::size_t s = 0; s < board_->site_count(); ++s)
    if (board_->matrix.get(s, region))
      next.lamps_.flip(s);
  next.history_.push_back(region);
  return next;
}

GameInstance GameInstance::apply_all(const std::vector<int> &regions) const {
  GameInstance g = *this;
  for (int r : regions)
    g = g.apply_rcc(r);
  return g;
}

BitVec toggled_sites(const LampBoard &b, const BitVec &x) { return b.matrix.multiply(x); }

GameAnswer solve_game(const GameInstance &g, std::size_t budget) {
  const auto &b = g.board();
  BitVec target = g.lamps().complement();
  auto out = solve(b.matrix, target);
  GameAnswer ans;
  if (!out.solved()) {
    ans.certificate = out.certificate;
    return ans;
  }
  auto best = min_weight_in_coset(out.particular, out.kernel_basis, budget);
  ans.solved = true;
  ans.regions = best ? *best : out.particular;
  verify(b, ans.regions, target);
  std::vector<int> moves;
  for (auto r : ans.regions.indices())
    moves.push_back(static_cast<int>(r));
  if (!g.apply_all(moves).won())
    throw Error("internal", "solution failed replay");
  return ans;
}

GameAnswer changeable(const LampBoard &b, int site, std::size_t budget) {
  check_site(b, site);
  BitVec target = BitVec::unit(b.site_count(), site);
  auto out = solve(b.matrix, target);
  GameAnswer ans;
  if (!out.solved()) {
    ans.certificate = out.certificate;
    return ans;
  }
  auto best = min_weight_in_coset(out.particular, out.kernel_basis, budget);
  ans.solved = true;
  ans.regions = best ? *best : out.particular;
  verify(b, ans.regions, target);
  return ans;
}

std::vector<BitVec> ineffective_sets(const LampBoard &b) {
  auto out = solve(b.matrix, BitVec(b.site_count()));
  for (const auto &k : out.kernel_basis)
    verify(b, k, BitVec(b.site_count()));
  return out.kernel_basis;
}

std::optional<BitVec> constrained_changing_set(const LampBoard &b, int site, const std::vector<int> &prohibited,
                                               const std::vector<int> &compulsory) {
  check_site(b, site);
  BitVec target = BitVec::unit(b.site_count(), site);
  auto out = solve_constrained(b.matrix, target, to_columns(b, compulsory), to_columns(b, prohibited));
  if (!out.solved())
    return std::nullopt;
  verify(b, out.particular, target);
  return out.particular;
}

std::optional<BitVec> constrained_ineffective_set(const LampBoard &b, const std::vector<int> &prohibited,
                                                  const std::vector<int> &compulsory) {
  BitVec zero(b.site_count());
  auto out = solve_constrained(b.matrix, zero, to_columns(b, compulsory), to_columns(b, prohibited));
  if (!out.solved())
    return std::nullopt;
  BitVec x = out.particular;
  if (x.none() && !out.kernel_basis.empty())
    x = out.kernel_basis.front();
  verify(b, x, zero);
  return x;
}

std::optional<BitVec> symmetric_difference_ineffective(const LampBoard &b, int r1, int r2) {
  check_region(b, r1);
  check_region(b, r2);
  BitVec s = BitVec::unit(b.region_count(), r1);
  for (std::size_t c = 0; c < b.site_count(); ++c) {
    if (!b.matrix.get(c, r1))
      continue;
    auto si = constrained_changing_set(b, static_cast<int>(c), {r1, r2}, {});
    if (!si)
      return std::nullopt;
    s ^= *si;
  }
  verify(b, s, BitVec(b.site_count()));
  return s;
}

std::optional<BitVec> compulsory_changing_set(const LampBoard &b, int site, int r1, int r2) {
  auto t = changeable(b, site);
  if (!t.solved)
    return std::nullopt;
  BitVec s = t.regions;
  if (!s.get(r1)) {
    auto s1 = symmetric_difference_ineffective(b, r1, r2);
    if (!s1)
      return std::nullopt;
    s ^= *s1;
  }
  if (s.get(r2)) {
    auto s2 = symmetric_difference_ineffective(b, r2, r1);
    if (!s2)
      return std::nullopt;
    s ^= *s2;
  }
  verify(b, s, BitVec::unit(b.site_count(), site));
  return s;
}

} // namespace regsel
