#include <algorithm>
#include <functional>
#include <map>

#include "regsel/error.hpp"
#include "regsel/unlink.hpp"

namespace regsel {

namespace {

// Calls fn on each k-subset of 0..n-1 in lexicographic order until it
// returns true.
bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int> &)> &fn) {
  if (k > n)
    return false;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i)
    s[i] = i;
  while (true) {
    if (fn(s))
      return true;
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i)
      --i;
    if (i < 0)
      return false;
    ++s[i];
    for (int j = i + 1; j < k; ++j)
      s[j] = s[j - 1] + 1;
  }
}

} // namespace

// Certifies D with the given crossings changed; results are cached by the
// changed set since they depend on nothing else.
class Certifier {
public:
  explicit Certifier(const LinkDiagram &d) : d_(d) {}
  const TrivialityCertificate &operator()(const std::vector<int> &changed) {
    auto it = cache_.find(changed);
    if (it != cache_.end())
      return it->second;
    TrivialityCertificate cert;
    LinkDiagram e = d_.with_changes(changed);
    if (!obviously_nontrivial(e))
      cert = simplify(e);
    return cache_.emplace(changed, std::move(cert)).first->second;
  }

private:
  const LinkDiagram &d_;
  std::map<std::vector<int>, TrivialityCertificate> cache_;
};

UnlinkResult classical_unlink_number(const LinkDiagram &d, int budget) {
  UnlinkResult res;
  Certifier certify(d);
  for (int k = 0; k <= std::min(budget, d.crossing_count()) && !res.count; ++k)
    for_each_subset(d.crossing_count(), k, [&](const std::vector<int> &s) {
      const auto &cert = certify(s);
      if (!cert.trivial)
        return false;
      res.count = k;
      res.witness = s;
      res.changed = s;
      res.certificate = cert;
      return true;
    });
  return res;
}

UnlinkResult circled_unlink_number(const LinkDiagram &d, const CirclePlacement &c, int budget) {
  UnlinkResult res;
  const SplitDiagram split = split_by_circle(d, c);
  const int regions = static_cast<int>(split.incidence.cols());
  Certifier certify(d);
  std::map<std::vector<int>, bool> tried;
  for (int k = 0; k <= std::min(budget, regions) && !res.count; ++k)
    for_each_subset(regions, k, [&](const std::vector<int> &s) {
      std::vector<int> changed;
      for (int x = 0; x < d.crossing_count(); ++x) {
        int bit = 0;
        for (int r : s)
          bit ^= split.incidence.get(x, r) ? 1 : 0;
        if (bit)
          changed.push_back(x);
      }
      if (!tried.emplace(changed, true).second)
        return false;
      const auto &cert = certify(changed);
      if (!cert.trivial)
        return false;
      res.count = k;
      res.witness = s;
      res.changed = changed;
      res.certificate = cert;
      return true;
    });
  return res;
}

CircledSearch circled_unlink_number_over_circles(const LinkDiagram &d, const std::vector<CirclePlacement> &family,
                                                 int budget) {
  CircledSearch out;
  for (const auto &c : family) {
    int limit = out.best.count ? std::min(budget, *out.best.count - 1) : budget;
    if (limit < 0)
      break;
    UnlinkResult r;
    try {
      r = circled_unlink_number(d, c, limit);
    } catch (const Error &) {
      continue;
    }
    ++out.circles_tried;
    if (r.count && (!out.best.count || *r.count < *out.best.count)) {
      out.best = std::move(r);
      out.circle = c;
    }
  }
  return out;
}

nlohmann::json certificate_to_json(const TrivialityCertificate &c) {
  nlohmann::json moves = nlohmann::json::array();
  for (const auto &m : c.moves) {
    const char *kind = m.kind == Move::Kind::r1 ? "R1" : m.kind == Move::Kind::r2 ? "R2" : "R3";
    moves.push_back({{"move", kind}, {"labels", m.labels}, {"crossings_after", m.crossings_after}});
  }
  return {{"trivial", c.trivial}, {"moves", moves}};
}

nlohmann::json circle_to_json(const CirclePlacement &c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &t : c.transits)
    out.push_back({{"label", t.label}, {"t", t.t}, {"side", t.side}});
  return out;
}

CirclePlacement circle_from_json(const nlohmann::json &j) {
  CirclePlacement c;
  const auto &arr = j.is_object() ? j.at("transits") : j;
  if (!arr.is_array())
    throw Error("bad_circle", "circle must be a list of transits");
  for (const auto &t : arr) {
    Transit tr;
    if (t.is_number_integer()) {
      tr.label = t.get<int>();
      tr.side = 0;
    } else {
      tr.label = t.at("label").get<int>();
      tr.t = t.value("t", 0.5);
      tr.side = t.value("side", 0);
    }
    if (!(tr.t > 0 && tr.t < 1))
      throw Error("bad_circle", "transit parameter must lie strictly between 0 and 1");
    c.transits.push_back(tr);
  }
  return c;
}

} // namespace regsel
