#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "regsel/error.hpp"
#include "regsel/game.hpp"

using namespace regsel;

TEST(Game, SevenLampFixtureWinsWithNineAndTwelve) {
  auto b = load_board_file(fixtures::path("seven_lamp_board.json"));
  ASSERT_EQ(b.site_count(), 7u);
  ASSERT_EQ(b.region_count(), 12u);
  EXPECT_FALSE(b.lamps.get(1));
  GameInstance g(b);
  EXPECT_FALSE(g.won());
  EXPECT_TRUE(g.apply_rcc(8).apply_rcc(11).won());
  auto ans = solve_game(g);
  ASSERT_TRUE(ans.solved);
  EXPECT_EQ(ans.regions.weight(), 2u);
}

TEST(Game, SevenLampFixtureChangeability) {
  auto b = load_board_file(fixtures::path("seven_lamp_board.json"));
  auto v1 = changeable(b, 0);
  EXPECT_FALSE(v1.solved);
  EXPECT_EQ(v1.certificate.indices(), (std::vector<std::size_t>{0, 2, 3, 4, 5, 6}));
  auto v2 = changeable(b, 1);
  ASSERT_TRUE(v2.solved);
  auto big = BitVec::from_indices(12, {1, 4, 5, 6, 8, 10});
  EXPECT_EQ(toggled_sites(b, big), BitVec::unit(7, 1));
}

TEST(Game, PlayingTwiceRestores) {
  auto g = GameInstance(make_board(fixtures::pd("knot_5_2.pd")));
  for (std::size_t r = 0; r < g.board().region_count(); ++r)
    EXPECT_EQ(g.apply_rcc(static_cast<int>(r)).apply_rcc(static_cast<int>(r)).lamps(), g.lamps());
  EXPECT_THROW(g.apply_rcc(99), Error);
}

TEST(Game, TrefoilAlwaysSolvable) {
  auto b = make_board(fixtures::pd("knot_3_1.pd"));
  for (unsigned m = 0; m < 8; ++m) {
    for (int s = 0; s < 3; ++s)
      b.lamps.set(s, (m >> s) & 1);
    auto ans = solve_game(GameInstance(b));
    EXPECT_TRUE(ans.solved);
  }
}

TEST(Game, SingleCircleHasNoLamps) {
  auto b = make_board(parse_pd("O\n"));
  EXPECT_EQ(b.site_count(), 0u);
  EXPECT_EQ(b.region_count(), 2u);
  EXPECT_EQ(ineffective_sets(b).size(), 2u);
  auto all = constrained_ineffective_set(b, {}, {0, 1});
  ASSERT_TRUE(all);
  EXPECT_EQ(all->weight(), 2u);
}

TEST(Game, NugatoryCrossingHasZeroEntry) {
  // One-crossing curl: the outer region touches the crossing twice.
  auto b = make_board(parse_pd("X(1,1,2,2)"));
  ASSERT_EQ(b.region_count(), 3u);
  int zeros = 0;
  for (std::size_t r = 0; r < 3; ++r)
    zeros += b.matrix.get(0, r) ? 0 : 1;
  EXPECT_EQ(zeros, 1);
}

// Every crossing of every knot fixture is changeable; exhaustive cross-check.
TEST(KnotCrossings, EveryCrossingChangeable) {
  auto files = fixtures::with_prefix("knot_");
  ASSERT_GE(files.size(), 10u);
  for (const auto &f : files) {
    auto b = make_board(fixtures::pd(f));
    for (std::size_t c = 0; c < b.site_count(); ++c) {
      EXPECT_TRUE(changeable(b, static_cast<int>(c)).solved) << f << " crossing " << c;
      if (b.region_count() <= 14)
        EXPECT_TRUE(fixtures::brute_solvable(b, BitVec::unit(b.site_count(), c))) << f;
    }
  }
}

// Inter-component crossings of two-component links are unchangeable, self-crossings changeable.
TEST(LinkCrossings, TwoComponentLinks) {
  int two = 0;
  for (const auto &f : fixtures::with_prefix("link_")) {
    auto d = fixtures::pd(f);
    if (d.component_count() != 2)
      continue;
    ++two;
    auto b = make_board(d);
    for (std::size_t s = 0; s < b.site_count(); ++s) {
      int x = b.sites[s];
      auto ans = changeable(b, static_cast<int>(s));
      EXPECT_EQ(ans.solved, d.is_self_crossing(x)) << f << " crossing " << x;
      if (!ans.solved) {
        EXPECT_TRUE(b.matrix.left_multiply(ans.certificate).none());
        EXPECT_TRUE(ans.certificate.get(s));
      }
      if (b.region_count() <= 14)
        EXPECT_EQ(fixtures::brute_solvable(b, BitVec::unit(b.site_count(), s)), ans.solved) << f;
    }
  }
  EXPECT_GE(two, 5);
}

// Constrained changing and ineffective sets on random knot projections.
TEST(ConstrainedSets, WitnessesOnRandomKnots) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    auto d = fixtures::random_knot(rng);
    auto b = make_board(d);
    const auto &map = *b.map();
    for (const auto &de : dual_graph(map)) {
      int r1 = de.a, r2 = de.b;
      if (r1 == r2)
        continue;
      for (int pass = 0; pass < 2; ++pass, std::swap(r1, r2)) {
        auto ineff = constrained_ineffective_set(b, {r2}, {r1});
        ASSERT_TRUE(ineff) << d.to_pd();
        auto built = symmetric_difference_ineffective(b, r1, r2);
        ASSERT_TRUE(built);
        EXPECT_TRUE(built->get(r1));
        EXPECT_FALSE(built->get(r2));
        EXPECT_TRUE(toggled_sites(b, *built).none());
        for (std::size_t c = 0; c < b.site_count(); ++c) {
          auto s3 = constrained_changing_set(b, static_cast<int>(c), {r1, r2}, {});
          ASSERT_TRUE(s3) << d.to_pd();
          auto s6 = compulsory_changing_set(b, static_cast<int>(c), r1, r2);
          ASSERT_TRUE(s6);
          EXPECT_TRUE(s6->get(r1));
          EXPECT_FALSE(s6->get(r2));
          EXPECT_EQ(toggled_sites(b, *s6), BitVec::unit(b.site_count(), c));
        }
      }
      auto avoid = constrained_ineffective_set(b, {r1, r2}, {});
      ASSERT_TRUE(avoid);
      EXPECT_TRUE(toggled_sites(b, *avoid).none());
    }
  }
}

// Final lamps depend only on the parity of each region's selections.
TEST(GameProperty, MoveOrderIrrelevant) {
  std::mt19937 rng(5);
  auto g = GameInstance(make_board(fixtures::pd("knot_6_2.pd")));
  const int n = static_cast<int>(g.board().region_count());
  for (int t = 0; t < 50; ++t) {
    std::vector<int> moves;
    for (int i = 0; i < 12; ++i)
      moves.push_back(static_cast<int>(rng() % n));
    auto a = g.apply_all(moves);
    std::shuffle(moves.begin(), moves.end(), rng);
    auto b = g.apply_all(moves);
    EXPECT_EQ(a.lamps(), b.lamps());
    BitVec parity(n);
    for (int r : moves)
      parity.flip(r);
    EXPECT_EQ(a.lamps(), g.lamps() ^ toggled_sites(g.board(), parity));
  }
}
