#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "regsel/error.hpp"
#include "regsel/unlink.hpp"

using namespace regsel;

namespace {

std::vector<std::string> all_diagrams() {
  auto v = fixtures::with_prefix("knot_");
  for (auto &l : fixtures::with_prefix("link_"))
    v.push_back(l);
  return v;
}

} // namespace

TEST(Simplify, CurlsAndBigonsVanish) {
  // Twisted unknot: two curls.
  auto d = LinkDiagram::from_braid({1}, 2);
  ASSERT_EQ(d.component_count(), 1);
  auto cert = simplify(d);
  EXPECT_TRUE(cert.trivial);
  EXPECT_EQ(replay(d, cert), 0);

  // σ1 σ1^-1 closes to a two-component unlink.
  auto u = LinkDiagram::from_braid({1, -1}, 2);
  auto c2 = simplify(u);
  ASSERT_TRUE(c2.trivial);
  ASSERT_EQ(c2.moves.size(), 1u);
  EXPECT_EQ(c2.moves[0].kind, Move::Kind::r2);
  EXPECT_EQ(apply_move(u, c2.moves[0]).free_loops(), 2);
}

TEST(Simplify, ReducedFixturesAreStuck) {
  for (const auto &f : all_diagrams()) {
    auto d = fixtures::pd(f);
    EXPECT_FALSE(simplify(d).trivial) << f;
    EXPECT_TRUE(available_moves(d, Move::Kind::r1).empty()) << f;
  }
}

TEST(Simplify, RandomCertificatesReplay) {
  std::mt19937 rng(11);
  int trivial = 0, slid = 0;
  for (int i = 0; i < 300; ++i) {
    auto d = fixtures::random_knot(rng, 2, 9);
    auto cert = simplify(d);
    if (!cert.trivial)
      continue;
    ++trivial;
    for (const auto &m : cert.moves)
      if (m.kind == Move::Kind::r3) {
        ++slid;
        break;
      }
    EXPECT_EQ(replay(d, cert), 0);
    EXPECT_EQ(link_determinant(d).value_or(1), 1);
  }
  EXPECT_GT(trivial, 20);
  EXPECT_GT(slid, 0);
}

TEST(Simplify, R3PreservesInvariants) {
  std::mt19937 rng(5);
  int slides = 0;
  for (int i = 0; i < 300; ++i) {
    auto d = fixtures::random_knot(rng, 4, 10);
    for (const auto &m : available_moves(d, Move::Kind::r3)) {
      auto e = apply_move(d, m);
      ++slides;
      EXPECT_EQ(e.crossing_count(), d.crossing_count());
      EXPECT_EQ(link_determinant(e), link_determinant(d));
      EXPECT_EQ(e.component_count(), d.component_count());
    }
  }
  EXPECT_GT(slides, 20);
}

TEST(Determinant, KnownValues) {
  const std::pair<const char *, long long> known[] = {
      {"knot_3_1.pd", 3},  {"knot_4_1.pd", 5},  {"knot_5_2.pd", 7},       {"knot_6_1.pd", 9},
      {"knot_7_4.pd", 15}, {"knot_8_19.pd", 3}, {"knot_9_42.pd", 7},      {"link_hopf.pd", 2},
      {"link_4_2_1.pd", 4}, {"link_5_2_1.pd", 8}, {"link_borromean.pd", 16}};
  for (auto [f, det] : known)
    EXPECT_EQ(link_determinant(fixtures::pd(f)), det) << f;
}

TEST(ProperLinks, LinkingParity) {
  EXPECT_FALSE(proper_link_check(fixtures::pd("link_hopf.pd")).proper);
  EXPECT_TRUE(proper_link_check(fixtures::pd("link_borromean.pd")).proper);
  EXPECT_FALSE(proper_link_check(fixtures::pd("link_7_2_1.pd")).proper);
  EXPECT_TRUE(proper_link_check(fixtures::pd("link_4_2_1.pd")).proper);
  EXPECT_TRUE(proper_link_check(fixtures::pd("knot_3_1.pd")).proper);
}

TEST(ClassicalUnlink, Oracles) {
  auto hopf = classical_unlink_number(fixtures::pd("link_hopf.pd"), 1);
  ASSERT_TRUE(hopf.count);
  EXPECT_EQ(*hopf.count, 1);
  auto l421 = fixtures::pd("link_4_2_1.pd");
  auto r = classical_unlink_number(l421, 2);
  ASSERT_TRUE(r.count);
  EXPECT_EQ(*r.count, 2);
  // One change cannot kill linking number 2.
  EXPECT_FALSE(classical_unlink_number(l421, 1).count);
  EXPECT_EQ(replay(l421.with_changes(r.changed), r.certificate), 0);
  EXPECT_EQ(*classical_unlink_number(fixtures::pd("knot_9_1.pd"), 4).count, 4);
}

TEST(CircledUnlink, HopfNeedsACircle) {
  auto d = fixtures::pd("link_hopf.pd");
  EXPECT_FALSE(circled_unlink_number(d, {}, 4).count);
  auto c = neighborhood_circle(d, {0});
  auto s = split_by_circle(d, c);
  EXPECT_EQ(s.side_region_count()[0], 4);
  EXPECT_EQ(s.crossing_side[0], 0);
  EXPECT_EQ(s.crossing_side[1], 1);
  auto r = circled_unlink_number(d, c, 2);
  ASSERT_TRUE(r.count);
  EXPECT_EQ(*r.count, 1);
}

TEST(CircledUnlink, FourTwoOne) {
  auto d = fixtures::pd("link_4_2_1.pd");
  auto best = circled_unlink_number_over_circles(d, circle_family(d), 3);
  ASSERT_TRUE(best.best.count);
  EXPECT_EQ(*best.best.count, 1);
  EXPECT_EQ(replay(d.with_changes(best.best.changed), best.best.certificate), 0);
}

TEST(CircledUnlink, BoundChain) {
  for (const auto &f : all_diagrams()) {
    auto d = fixtures::pd(f);
    auto u = classical_unlink_number(d, d.crossing_count() / 2);
    ASSERT_TRUE(u.count) << f;
    EXPECT_LE(*u.count, d.crossing_count() / 2) << f;
    auto ur = circled_unlink_number_over_circles(d, circle_family(d), *u.count);
    ASSERT_TRUE(ur.best.count) << f;
    EXPECT_LE(*ur.best.count, *u.count) << f;
  }
}

TEST(CircledUnlink, EmptyCircleIsPlainRcc) {
  auto d = fixtures::pd("knot_3_1.pd");
  auto s = split_by_circle(d, {});
  EXPECT_EQ(s.incidence.cols(), d.map().region_count());
}

TEST(CircledUnlink, ImproperNeverByPlainRcc) {
  for (const auto &f : all_diagrams()) {
    auto d = fixtures::pd(f);
    if (proper_link_check(d).proper || d.map().region_count() > 14)
      continue;
    EXPECT_FALSE(circled_unlink_number(d, {}, static_cast<int>(d.map().region_count())).count) << f;
  }
}

TEST(Circle, RejectsBadCurves) {
  auto d = fixtures::pd("knot_3_1.pd");
  CirclePlacement one{{Transit{1, 0.5, 1}}};
  EXPECT_THROW(split_by_circle(d, one), Error);
  // Two transits on edges with no face in common cannot close up.
  auto c = neighborhood_circle(d, {0});
  c.transits.pop_back();
  c.transits.pop_back();
  c.transits.push_back(c.transits.front());
  c.transits.back().t = 0.3;
  EXPECT_THROW(split_by_circle(d, c), Error);
}

TEST(Circle, InferSides) {
  auto d = fixtures::pd("link_4_2_1.pd");
  auto c = neighborhood_circle(d, {0, 1});
  auto bare = c;
  for (auto &t : bare.transits)
    t.side = 0;
  EXPECT_NO_THROW(split_by_circle(d, bare));
  EXPECT_EQ(circle_from_json(circle_to_json(c)).transits, c.transits);
}

TEST(Circle, SmallCircleEveryCrossing) {
  for (const auto &f : all_diagrams()) {
    auto d = fixtures::pd(f);
    for (int x = 0; x < d.crossing_count(); ++x) {
      auto s = split_by_circle(d, neighborhood_circle(d, {x}));
      EXPECT_EQ(s.side_region_count()[0], 4) << f;
      for (int y = 0; y < d.crossing_count(); ++y)
        EXPECT_EQ(s.crossing_side[y], y == x ? 0 : 1) << f;
    }
  }
}

TEST(Circle, NeighbourhoodSeparatesSites) {
  // Every witness set found classically fits inside a neighbourhood circle.
  for (const auto &f : all_diagrams()) {
    auto d = fixtures::pd(f);
    auto u = classical_unlink_number(d, d.crossing_count() / 2);
    if (u.changed.size() < 2)
      continue;
    auto s = split_by_circle(d, neighborhood_circle(d, u.changed));
    for (int x : u.changed)
      EXPECT_EQ(s.crossing_side[x], 0) << f;
  }
}

TEST(Spur, PreservesLinkAndAddsFourPerTransit) {
  auto d = fixtures::pd("link_borromean.pd");
  int moved = 0;
  for (int c = 0; c < d.crossing_count(); ++c)
    for (std::size_t r = 0; r < d.map().region_count(); ++r) {
      std::vector<int> path;
      try {
        path = dual_path_to_region(d, c, static_cast<int>(r));
      } catch (const Error &) {
        continue;
      }
      auto e = spur_move(d, c, path);
      moved += path.empty() ? 0 : 1;
      EXPECT_EQ(e.crossing_count(), d.crossing_count() + 4 * static_cast<int>(path.size()));
      EXPECT_EQ(link_determinant(e), link_determinant(d));
      EXPECT_EQ(e.crossings()[c].sign(), d.crossings()[c].sign());
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
          EXPECT_EQ(e.linking_number(a, b), d.linking_number(a, b));
    }
  EXPECT_GT(moved, 10);
}

TEST(Spur, OneCircledMoveAfterGathering) {
  int spurred = 0;
  for (const auto &f : all_diagrams()) {
    auto d = fixtures::pd(f);
    auto u = classical_unlink_number(d, d.crossing_count() / 2);
    ASSERT_TRUE(u.count);
    auto g = gather_crossings(d, u.changed);
    if (g.diagram.crossing_count() > d.crossing_count())
      ++spurred;
    auto s = split_by_circle(g.diagram, g.circle);
    // The region inside the circle at the gathering point toggles exactly the witnesses.
    bool found = false;
    for (std::size_t r = 0; r < s.incidence.cols() && !found; ++r) {
      std::vector<int> toggled;
      for (int x = 0; x < g.diagram.crossing_count(); ++x)
        if (s.incidence.get(x, r))
          toggled.push_back(x);
      found = s.region_side[r] == 0 && toggled == u.changed;
    }
    EXPECT_TRUE(found) << f;
    auto r = circled_unlink_number(g.diagram, g.circle, 1);
    ASSERT_TRUE(r.count) << f;
    EXPECT_EQ(*r.count, 1) << f;
  }
  EXPECT_GE(spurred, 3);
}
