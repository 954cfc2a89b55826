// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "fixtures.hpp"
#include "regsel/game.hpp"
#include "regsel/tangle.hpp"
#include "regsel/unlink.hpp"

using namespace regsel;

namespace {

struct Check {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

LampBoard board(const std::string &name) { return load_board_file(fixtures::path(name)); }

BitVec one_based(std::vector<std::size_t> idx, std::size_t n) {
  for (auto &i : idx)
    --i;
  return BitVec::from_indices(n, idx);
}

Check seven_lamp_system() {
  Check c;
  auto b = board("seven_lamp_board.json");
  const std::vector<std::vector<std::size_t>> printed = {
      {1, 5, 7, 8}, {4, 5, 6, 9, 10}, {3, 6, 10, 11}, {1, 2, 4, 5}, {2, 3, 4, 6}, {7, 8, 9, 12}, {9, 10, 11, 12}};
  c.require(b.site_count() == 7 && b.region_count() == 12, "fixture is not 7x12");
  for (std::size_t r = 0; r < printed.size() && c.ok; ++r)
    c.require(b.matrix.row(r) == one_based(printed[r], 12), "row " + std::to_string(r + 1) + " differs");
  auto v1 = changeable(b, 0);
  c.require(!v1.solved, "e_v1 solvable");
  c.require(v1.certificate == one_based({1, 3, 4, 5, 6, 7}, 7), "certificate rows differ");
  c.require(b.matrix.left_multiply(v1.certificate).none(), "certificate does not sum to zero");
  auto v2 = changeable(b, 1);
  c.require(v2.solved, "e_v2 infeasible");
  c.require(toggled_sites(b, one_based({9, 12}, 12)) == BitVec::unit(7, 1), "{R9,R12} fails");
  c.require(toggled_sites(b, one_based({2, 5, 6, 7, 9, 11}, 12)) == BitVec::unit(7, 1), "six-region set fails");
  c.note = c.ok ? "certificate {1,3,4,5,6,7}; both printed solutions verify" : c.note;
  return c;
}

Check theorem3() {
  Check c;
  auto files = fixtures::with_prefix("knot_");
  c.require(files.size() >= 10, "fewer than 10 knot fixtures");
  int brute = 0;
  for (const auto &f : files) {
    auto b = make_board(fixtures::pd(f));
    for (std::size_t s = 0; s < b.site_count(); ++s) {
      auto a = changeable(b, static_cast<int>(s));
      c.require(a.solved && toggled_sites(b, a.regions) == BitVec::unit(b.site_count(), s), f + " crossing unchangeable");
      if (b.region_count() <= 14) {
        c.require(fixtures::brute_solvable(b, BitVec::unit(b.site_count(), s)), f + " brute force disagrees");
        ++brute;
      }
    }
  }
  if (c.ok)
    c.note = std::to_string(files.size()) + " knots, " + std::to_string(brute) + " crossings brute-forced";
  return c;
}

Check theorem4() {
  Check c;
  int two = 0;
  for (const auto &f : fixtures::with_prefix("link_")) {
    auto d = fixtures::pd(f);
    if (d.component_count() != 2)
      continue;
    ++two;
    auto b = make_board(d);
    for (std::size_t s = 0; s < b.site_count(); ++s) {
      auto a = changeable(b, static_cast<int>(s));
      bool self = d.is_self_crossing(b.sites[s]);
      c.require(a.solved == self, f + " crossing " + std::to_string(s) + " misclassified");
      if (!a.solved)
        c.require(a.certificate.get(s) && b.matrix.left_multiply(a.certificate).none(), f + " bad certificate");
    }
  }
  c.require(two >= 5, "fewer than 5 two-component fixtures");
  if (c.ok)
    c.note = std::to_string(two) + " two-component links";
  return c;
}

Check lemmas() {
  Check c;
  std::mt19937 rng(2024);
  long checks = 0;
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    auto b = make_board(fixtures::random_knot(rng));
    for (const auto &de : dual_graph(*b.map())) {
      int r1 = de.a, r2 = de.b;
      if (r1 == r2)
        continue;
      for (int pass = 0; pass < 2; ++pass, std::swap(r1, r2)) {
        auto solver = constrained_ineffective_set(b, {r2}, {r1});
        auto built = symmetric_difference_ineffective(b, r1, r2);
        c.require(solver && built && built->get(r1) && !built->get(r2) && toggled_sites(b, *built).none(),
                  "symmetric-difference set disagrees with solver");
        for (std::size_t s = 0; s < b.site_count(); ++s) {
          auto unit = BitVec::unit(b.site_count(), s);
          auto s3 = constrained_changing_set(b, static_cast<int>(s), {r1, r2}, {});
          c.require(s3 && toggled_sites(b, *s3) == unit && !s3->get(r1) && !s3->get(r2), "changing set avoiding two regions");
          auto s6 = compulsory_changing_set(b, static_cast<int>(s), r1, r2);
          c.require(s6 && s6->get(r1) && !s6->get(r2) && toggled_sites(b, *s6) == unit, "compulsory changing set");
          checks += 2;
        }
      }
      auto s4 = constrained_ineffective_set(b, {r1, r2}, {});
      c.require(s4 && toggled_sites(b, *s4).none() && !s4->get(r1) && !s4->get(r2), "ineffective set avoiding two regions");
    }
  }
  if (c.ok)
    c.note = "200 random knots, " + std::to_string(checks) + " witnesses applied";
  return c;
}

Check lamp_linking_parity() {
  Check c;
  const std::vector<std::string> files = {"crease_diamond.fold", "crease_bowtie.fold", "crease_alpha.fold",
                                          "crease_grid.fold",    "crease_t1.fold",     "crease_t2.fold",
                                          "crease_t3.fold",      "crease_contact_bowtie.fold"};
  long moves = 0;
  for (const auto &f : files) {
    auto t = tanglize(board(f));
    const auto &b = *t.board;
    for (std::size_t k = 0; k < t.components.size(); ++k) {
      if (!t.components[k].closed || !is_even_component(t, static_cast<int>(k)))
        continue;
      const std::size_t n = b.site_count();
      const std::uint64_t states = n <= 12 ? (std::uint64_t{1} << n) : 4096;
      for (std::uint64_t m = 0; m < states; ++m) {
        BitVec lamps(n);
        for (std::size_t s = 0; s < n; ++s)
          lamps.set(s, (m >> (s % 64)) & 1);
        int before = lamp_linking(t, static_cast<int>(k), lamps).twice_value;
        for (std::size_t r = 0; r < b.region_count(); ++r) {
          auto after = lamps ^ toggled_sites(b, BitVec::unit(b.region_count(), r));
          int delta = lamp_linking(t, static_cast<int>(k), after).twice_value - before;
          c.require(delta % 4 == 0, f + ": odd change of l(K)");
          ++moves;
        }
      }
    }
  }
  auto zero = tanglize(board("board_linking_zero.json"));
  auto even = even_components(zero);
  c.require(!even.empty() && lamp_linking(zero, even[0], zero.board->lamps).twice_value == 0,
            "reconstruction does not give l(K) = 0");
  if (c.ok)
    c.note = std::to_string(moves) + " single moves checked; reconstruction l(K) = 0";
  return c;
}

Check even_classification() {
  Check c;
  c.require(even_components(tanglize(board("crease_t1.fold"))).empty(), "T1 has even components");
  c.require(even_components(tanglize(board("crease_t2.fold"))).empty(), "T2 has even components");
  auto t3 = tanglize(board("crease_t3.fold"));
  c.require(tangle_to_json(t3)["even_components"] == nlohmann::json({"K1"}), "T3 is not {K1}");
  if (c.ok)
    c.note = "T1 none, T2 none, T3 {K1}";
  return c;
}

Check circled_unlinking() {
  Check c;
  auto hopf = fixtures::pd("link_hopf.pd");
  auto hr = circled_unlink_number(hopf, neighborhood_circle(hopf, {0}), 2);
  c.require(hr.count && *hr.count == 1, "Hopf crossing-circle does not give 1");
  c.require(hr.count && replay(hopf.with_changes(hr.changed), hr.certificate) == 0, "Hopf replay");
  auto l = fixtures::pd("link_4_2_1.pd");
  auto u = classical_unlink_number(l, 2);
  c.require(u.count && *u.count == 2 && !classical_unlink_number(l, 1).count, "4^2_1 classical != 2");
  auto lr = circled_unlink_number_over_circles(l, circle_family(l), 2);
  c.require(lr.best.count && *lr.best.count == 1, "4^2_1 circled != 1");
  int diagrams = 0;
  auto all = fixtures::with_prefix("knot_");
  for (const auto &f : fixtures::with_prefix("link_"))
    all.push_back(f);
  for (const auto &f : all) {
    auto d = fixtures::pd(f);
    auto ud = classical_unlink_number(d, d.crossing_count() / 2);
    if (!ud.count)
      continue;
    ++diagrams;
    auto ur = circled_unlink_number_over_circles(d, circle_family(d), *ud.count);
    c.require(ur.best.count && *ur.best.count <= *ud.count && 2 * *ud.count <= d.crossing_count(),
              f + ": bound chain fails");
  }
  c.require(diagrams == static_cast<int>(all.size()), "certifier failed on some fixture");
  if (c.ok)
    c.note = "Hopf 1, 4^2_1 classical 2 circled 1, bounds on " + std::to_string(diagrams) + " diagrams";
  return c;
}

Check theorem2() {
  Check c;
  int spurred = 0;
  std::string names;
  auto files = fixtures::with_prefix("link_");
  for (const auto &f : fixtures::with_prefix("knot_"))
    files.push_back(f);
  for (const auto &f : files) {
    auto d = fixtures::pd(f);
    auto u = classical_unlink_number(d, d.crossing_count() / 2);
    if (!u.count)
      continue;
    auto g = gather_crossings(d, u.changed);
    if (g.diagram.crossing_count() == d.crossing_count())
      continue;
    auto s = split_by_circle(g.diagram, g.circle);
    bool one = false;
    for (std::size_t r = 0; r < s.incidence.cols() && !one; ++r) {
      if (s.region_side[r] != 0)
        continue;
      std::vector<int> toggled;
      for (int x = 0; x < g.diagram.crossing_count(); ++x)
        if (s.incidence.get(x, r))
          toggled.push_back(x);
      if (toggled != u.changed)
        continue;
      auto cert = simplify(g.diagram.with_changes(toggled));
      one = cert.trivial && replay(g.diagram.with_changes(toggled), cert) == 0;
    }
    c.require(one, f + ": no single inner region unlinks");
    ++spurred;
    names += (names.empty() ? "" : " ") + f.substr(0, f.size() - 3);
  }
  c.require(spurred >= 3, "fewer than 3 fixtures needed spur moves");
  if (c.ok)
    c.note = std::to_string(spurred) + " spurred diagrams (" + names + ")";
  return c;
}

Check proper_links() {
  Check c;
  c.require(!proper_link_check(fixtures::pd("link_hopf.pd")).proper, "Hopf proper");
  c.require(proper_link_check(fixtures::pd("link_borromean.pd")).proper, "Borromean improper");
  c.require(!proper_link_check(fixtures::pd("link_7_2_1.pd")).proper, "7^2_1 proper");
  if (c.ok)
    c.note = "Hopf improper, Borromean proper, 7^2_1 improper";
  return c;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"seven-lamp system reproduction", seven_lamp_system},
      {"knot crossings all changeable", theorem3},
      {"two-component link changeability", theorem4},
      {"constrained witness sets", lemmas},
      {"lamp-linking parity", lamp_linking_parity},
      {"even-component classification", even_classification},
      {"circled unlinking numbers", circled_unlinking},
      {"spur moves then one circled RCC", theorem2},
      {"proper link check", proper_links},
  };
  int failed = 0;
  for (const auto &[name, fn] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = fn();
    } catch (const std::exception &e) {
      c.ok = false;
      c.note = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (c.ok ? "PASS " : "FAIL ") << name << ": " << c.note << " (" << ms << " ms)\n";
    failed += c.ok ? 0 : 1;
  }
  return failed;
}
