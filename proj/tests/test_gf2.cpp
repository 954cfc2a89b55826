#include <gtest/gtest.h>

#include <random>

#include "regsel/error.hpp"
#include "regsel/gf2.hpp"

using namespace regsel;

namespace {

// Seven lamps, twelve regions; row i lists the regions with an odd corner count at lamp i+1.
Gf2Matrix seven_by_twelve() {
  const std::vector<std::vector<std::size_t>> rows = {
      {1, 5, 7, 8}, {4, 5, 6, 9, 10}, {3, 6, 10, 11}, {1, 2, 4, 5}, {2, 3, 4, 6}, {7, 8, 9, 12}, {9, 10, 11, 12}};
  Gf2Matrix a(7, 12);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto c : rows[r])
      a.set(r, c - 1);
  return a;
}

BitVec cols(std::vector<std::size_t> one_based, std::size_t n) {
  BitVec v(n);
  for (auto c : one_based)
    v.set(c - 1);
  return v;
}

Gf2Matrix random_matrix(std::mt19937 &rng, std::size_t r, std::size_t c) {
  Gf2Matrix a(r, c);
  std::bernoulli_distribution coin(0.4);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      a.set(i, j, coin(rng));
  return a;
}

} // namespace

TEST(BitVec, StringRoundTrip) {
  auto v = BitVec::from_string("0110001");
  EXPECT_EQ(v.to_string(), "0110001");
  EXPECT_EQ(v.weight(), 3u);
  EXPECT_EQ(v.indices(), (std::vector<std::size_t>{1, 2, 6}));
  EXPECT_THROW(BitVec::from_string("01x"), Error);
}

TEST(Gf2, SevenLampBoardSingleOffIsInfeasible) {
  auto a = seven_by_twelve();
  auto out = solve(a, BitVec::unit(7, 0));
  ASSERT_FALSE(out.solved());
  EXPECT_EQ(out.certificate, cols({1, 3, 4, 5, 6, 7}, 7));
  EXPECT_TRUE(a.left_multiply(out.certificate).none());
}

TEST(Gf2, SevenLampBoardSecondLampHasKnownSolutions) {
  auto a = seven_by_twelve();
  auto b = BitVec::unit(7, 1);
  auto out = solve(a, b);
  ASSERT_TRUE(out.solved());
  EXPECT_EQ(a.multiply(cols({9, 12}, 12)), b);
  EXPECT_EQ(a.multiply(cols({2, 5, 6, 7, 9, 11}, 12)), b);
  auto best = min_weight_solution(a, b);
  ASSERT_TRUE(best);
  // Five weight-2 solutions exist: {1,5} {2,4} {3,6} {9,12} {10,11}.
  EXPECT_EQ(best->to_string(), cols({1, 5}, 12).to_string());
}

TEST(Gf2, ConstrainedForcesColumns) {
  auto a = seven_by_twelve();
  auto b = BitVec::unit(7, 1);
  auto out = solve_constrained(a, b, {1}, {8});
  ASSERT_TRUE(out.solved());
  EXPECT_TRUE(out.particular.get(1));
  EXPECT_FALSE(out.particular.get(8));
  EXPECT_EQ(a.multiply(out.particular), b);
  EXPECT_THROW(solve_constrained(a, b, {3}, {3}), Error);
}

TEST(Gf2, MinWeightTieBreakIsLexicographic) {
  // Two columns both solve e0; the first column wins.
  auto a = Gf2Matrix::from_rows({"11"});
  auto best = min_weight_solution(a, BitVec::from_string("1"));
  ASSERT_TRUE(best);
  EXPECT_EQ(best->to_string(), "10");
}

// Property: solved outcomes satisfy A·x = b; infeasible ones carry y with yA = 0, y·b = 1.
TEST(Gf2Property, SolveOrCertify) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
    auto a = random_matrix(rng, r, c);
    BitVec b(r);
    for (std::size_t i = 0; i < r; ++i)
      b.set(i, rng() & 1);
    auto out = solve(a, b);
    if (out.solved()) {
      EXPECT_EQ(a.multiply(out.particular), b);
      EXPECT_EQ(out.kernel_basis.size(), c - a.rank());
      for (const auto &k : out.kernel_basis)
        EXPECT_TRUE(a.multiply(k).none());
    } else {
      EXPECT_TRUE(a.left_multiply(out.certificate).none());
      EXPECT_TRUE(out.certificate.dot(b));
    }
  }
}

// Property: min-weight agrees with brute force on small systems.
TEST(Gf2Property, MinWeightMatchesBruteForce) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 10;
    auto a = random_matrix(rng, r, c);
    BitVec b(r);
    for (std::size_t i = 0; i < r; ++i)
      b.set(i, rng() & 1);
    std::optional<BitVec> brute;
    for (std::uint32_t m = 0; m < (1u << c); ++m) {
      BitVec x(c);
      for (std::size_t j = 0; j < c; ++j)
        x.set(j, (m >> j) & 1);
      if (a.multiply(x) != b)
        continue;
      if (!brute || x.weight() < brute->weight() || (x.weight() == brute->weight() && lex_less(x, *brute)))
        brute = x;
    }
    auto got = min_weight_solution(a, b, c);
    ASSERT_EQ(got.has_value(), brute.has_value());
    if (got)
      EXPECT_EQ(*got, *brute);
  }
}
