#include "regsel/foldability.hpp"

#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "regsel/error.hpp"

namespace regsel {

namespace {

using Big = boost::multiprecision::cpp_int;

struct Gauss {
  Big re, im;
};

Gauss mul(const Gauss &a, const Gauss &b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

// Direction p -> q scaled by a positive integer so both parts are integers.
Gauss direction(const Point &p, const Point &q) {
  auto frac = [](const std::optional<Rational> &a, const std::optional<Rational> &b) {
    Big num = Big(b->num) * a->den - Big(a->num) * b->den;
    Big den = Big(a->den) * b->den;
    return std::pair{num, den};
  };
  auto [xn, xd] = frac(p.exact_x, q.exact_x);
  auto [yn, yd] = frac(p.exact_y, q.exact_y);
  return {xn * yd, yn * xd};
}

// Sum of every other sector, starting at `start`, is exactly 180° iff the
// product of w_i * conj(u_i) over those sectors is a negative real.
bool exact_half_turn(const std::vector<Gauss> &dirs, std::size_t start) {
  Gauss acc{1, 0};
  for (std::size_t i = start; i < dirs.size(); i += 2) {
    const auto &u = dirs[i];
    const auto &w = dirs[(i + 1) % dirs.size()];
    acc = mul(acc, Gauss{w.re * u.re + w.im * u.im, w.im * u.re - w.re * u.im});
  }
  return acc.im == 0 && acc.re < 0;
}

} // namespace

FoldReport check_flat_foldable_necessary(const CreasePattern &p) {
  FoldReport out;
  const auto &map = p.map;
  for (std::size_t vi = 0; vi < map.vertex_count(); ++vi) {
    int v = static_cast<int>(vi);
    if (map.is_boundary_vertex(v))
      continue;
    VertexFoldReport r;
    r.vertex = v;
    r.degree = map.degree(v);
    r.even_degree = r.degree % 2 == 0;
    r.sector_angles = p.sector_angles[v];
    for (std::size_t i = 0; i < r.sector_angles.size(); ++i)
      (i % 2 == 0 ? r.alternating_sum_odd : r.alternating_sum_even) += r.sector_angles[i];
    if (std::abs(r.alternating_sum_odd + r.alternating_sum_even - 360.0) > kAngleTolerance)
      throw Error("internal", "alternating sums at vertex " + std::to_string(v) + " do not add to 360");
    if (r.even_degree) {
      bool exact = p.vertices[v].exact();
      std::vector<Gauss> dirs;
      for (int d : map.darts_at(v)) {
        const auto &q = p.vertices[map.vertex_of(map.opposite(d))];
        exact = exact && q.exact();
        if (exact)
          dirs.push_back(direction(p.vertices[v], q));
      }
      r.exact = exact;
      if (exact)
        r.alternating_ok = exact_half_turn(dirs, 0) && exact_half_turn(dirs, 1);
      else
        r.alternating_ok = std::abs(r.alternating_sum_odd - 180.0) <= kAngleTolerance &&
                           std::abs(r.alternating_sum_even - 180.0) <= kAngleTolerance;
    }
    out.pass = out.pass && r.pass();
    out.vertices.push_back(std::move(r));
  }
  return out;
}

nlohmann::json fold_report_to_json(const FoldReport &r) {
  nlohmann::json j;
  j["pass"] = r.pass;
  j["note"] = "even degree and 180-degree alternating sums are necessary, not sufficient, for flat foldability";
  auto &vs = j["vertices"] = nlohmann::json::array();
  for (const auto &v : r.vertices)
    vs.push_back({{"vertex", v.vertex},
                  {"degree", v.degree},
                  {"even_degree", v.even_degree},
                  {"sector_angles", v.sector_angles},
                  {"alternating_sums", {v.alternating_sum_odd, v.alternating_sum_even}},
                  {"alternating_ok", v.alternating_ok},
                  {"exact", v.exact},
                  {"pass", v.pass()}});
  return j;
}

} // namespace regsel
