#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "regsel/foldability.hpp"

using namespace regsel;

namespace {

CreasePattern fold(const std::string &name) { return parse_fold_text(fixtures::read(name)); }

// Rays from the centre at the given angles (degrees), meeting the sheet edge.
CreasePattern star(const std::vector<double> &angles) {
  std::vector<Point> v{{0.5, 0.5}};
  std::vector<std::pair<int, int>> e;
  for (double a : angles) {
    double r = a * std::numbers::pi / 180.0;
    double dx = std::cos(r), dy = std::sin(r);
    double t = 1e9;
    if (std::abs(dx) > 1e-12)
      t = std::min(t, 0.5 / std::abs(dx));
    if (std::abs(dy) > 1e-12)
      t = std::min(t, 0.5 / std::abs(dy));
    Point p;
    p.x = 0.5 + t * dx;
    p.y = 0.5 + t * dy;
    v.push_back(p);
    e.emplace_back(0, static_cast<int>(v.size()) - 1);
  }
  return make_crease_pattern(v, e);
}

} // namespace

TEST(Foldability, Diagonals) {
  auto r = check_flat_foldable_necessary(fold("crease_diagonals.fold"));
  ASSERT_EQ(r.vertices.size(), 1u);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.vertices[0].exact);
  EXPECT_EQ(r.vertices[0].degree, 4);
}

TEST(Foldability, OddDegreeFails) {
  auto r = check_flat_foldable_necessary(fold("crease_y.fold"));
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.vertices[0].even_degree);
}

TEST(Foldability, UnevenSectorsFail) {
  auto r = check_flat_foldable_necessary(star({0, 100, 180, 280}));
  EXPECT_FALSE(r.pass);
  double lo = std::min(r.vertices[0].alternating_sum_odd, r.vertices[0].alternating_sum_even);
  EXPECT_NEAR(lo, 160.0, 1e-9);
  EXPECT_FALSE(r.vertices[0].exact);
}

TEST(Foldability, FloatInputsWithinTolerance) {
  // sectors 50, 80, 130, 100
  EXPECT_TRUE(check_flat_foldable_necessary(star({10, 60, 140, 270})).pass);
  EXPECT_FALSE(check_flat_foldable_necessary(star({10, 60, 140.01, 270})).pass);
}

TEST(Foldability, PreliminaryBase) {
  auto p = fold("crease_preliminary.fold");
  EXPECT_EQ(p.map.region_count(), 8u);
  EXPECT_EQ(p.map.vertex_count(), 9u);
  auto r = check_flat_foldable_necessary(p);
  ASSERT_EQ(r.vertices.size(), 1u);
  EXPECT_EQ(r.vertices[0].degree, 8);
  EXPECT_TRUE(r.pass);
}

TEST(Foldability, FixtureVerdicts) {
  EXPECT_TRUE(check_flat_foldable_necessary(fold("crease_diamond.fold")).pass);
  EXPECT_TRUE(check_flat_foldable_necessary(fold("crease_grid.fold")).pass);
  EXPECT_FALSE(check_flat_foldable_necessary(fold("crease_bowtie.fold")).pass);
}

// The alternating sums always add to 360.
TEST(FoldabilityProperty, SumsAddToFullTurn) {
  for (const auto &f : fixtures::with_prefix("crease_"))
    for (const auto &v : check_flat_foldable_necessary(fold(f)).vertices)
      EXPECT_NEAR(v.alternating_sum_odd + v.alternating_sum_even, 360.0, 1e-9) << f;
}
