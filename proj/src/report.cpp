#include "regsel/report.hpp"

#include <sstream>

#include "regsel/error.hpp"
#include "regsel/foldability.hpp"
#include "regsel/tangle.hpp"

namespace regsel {

namespace {

using nlohmann::json;

json names(const BitVec &v, const std::vector<std::string> &n) {
  json out = json::array();
  for (auto i : v.indices())
    out.push_back(n[i]);
  return out;
}

json ids(const BitVec &v) {
  json out = json::array();
  for (auto i : v.indices())
    out.push_back(i);
  return out;
}

const char *kind_name(BoardKind k) {
  switch (k) {
  case BoardKind::link:
    return "link";
  case BoardKind::crease:
    return "crease";
  case BoardKind::disk:
    return "disk";
  case BoardKind::matrix:
    break;
  }
  return "matrix";
}

std::string join(const json &arr) {
  std::string s;
  for (const auto &x : arr)
    s += (s.empty() ? "" : ", ") + (x.is_string() ? x.get<std::string>() : x.dump());
  return s.empty() ? "-" : s;
}

} // namespace

json error_json(const std::string &code, const std::string &message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

json solve_report(const GameInstance &g, std::size_t budget) {
  const auto &b = g.board();
  auto ans = solve_game(g, budget);
  json out{{"solved", ans.solved}, {"lamps", g.lamps().to_string()}};
  if (ans.solved) {
    out["regions"] = ids(ans.regions);
    out["region_names"] = names(ans.regions, b.region_names);
  } else {
    out["certificate"] = ids(ans.certificate);
    out["certificate_sites"] = names(ans.certificate, b.site_names);
  }
  return out;
}

json analyze_report(const LampBoard &b, std::size_t budget) {
  json out{{"kind", kind_name(b.kind)},
           {"sites", b.site_count()},
           {"regions", b.region_count()},
           {"kernel_dimension", b.region_count() - b.matrix.rank()}};
  out["solve"] = solve_report(GameInstance(b), budget);
  json per = json::array();
  for (std::size_t s = 0; s < b.site_count(); ++s) {
    auto a = changeable(b, static_cast<int>(s), budget);
    json e{{"site", s}, {"name", b.site_names[s]}, {"changeable", a.solved}};
    if (a.solved)
      e["regions"] = names(a.regions, b.region_names);
    else
      e["certificate"] = names(a.certificate, b.site_names);
    per.push_back(e);
  }
  out["changeability"] = per;
  if (b.kind == BoardKind::crease || b.kind == BoardKind::disk) {
    try {
      auto t = tanglize(b);
      out["tangle"] = tangle_to_json(t);
    } catch (const Error &e) {
      out["tangle"] = error_json(e.code(), e.what());
    }
  }
  if (b.kind == BoardKind::crease)
    out["foldability"] = fold_report_to_json(check_flat_foldable_necessary(*b.crease));
  if (b.kind == BoardKind::link) {
    auto p = proper_link_check(*b.link);
    out["proper"] = p.proper;
    out["components"] = b.link->component_count();
  }
  return out;
}

json unlink_report(const LinkDiagram &d, const UnlinkOptions &opt) {
  const int budget = opt.budget >= 0 ? opt.budget : d.crossing_count() / 2;
  json out{{"crossings", d.crossing_count()}, {"components", d.component_count()}, {"budget", budget}};
  out["proper"] = proper_link_check(d).proper;
  if (auto det = link_determinant(d))
    out["determinant"] = *det;
  auto u = classical_unlink_number(d, budget);
  out["u_upper"] = u.count ? json(*u.count) : json(nullptr);
  out["classical_witness"] = u.changed;

  UnlinkResult best;
  CirclePlacement circle;
  if (opt.circle) {
    best = circled_unlink_number(d, *opt.circle, budget);
    circle = *opt.circle;
  } else {
    auto s = circled_unlink_number_over_circles(d, circle_family(d, opt.max_path), budget);
    best = std::move(s.best);
    circle = s.circle;
    out["circles_tried"] = s.circles_tried;
  }
  out["u_circled_upper"] = best.count ? json(*best.count) : json(nullptr);
  if (best.count) {
    out["witness_moves"] = {{"circle", circle_to_json(circle)},
                            {"regions", best.witness},
                            {"crossings_changed", best.changed}};
    out["certificate"] = certificate_to_json(best.certificate);
  } else {
    out["witness_moves"] = nullptr;
    out["certificate"] = {{"verdict", "inconclusive"}};
  }
  return out;
}

std::string solve_text(const json &r) {
  std::ostringstream s;
  if (r.at("solved").get<bool>() && r.at("region_names").empty())
    s << "all lamps on\n";
  else if (r.at("solved").get<bool>())
    s << "solvable: select " << join(r.at("region_names")) << "\n";
  else
    s << "unsolvable: rows " << join(r.at("certificate_sites")) << " sum to 0 = 1\n";
  return s.str();
}

std::string analyze_text(const json &r) {
  std::ostringstream s;
  s << r.at("kind").get<std::string>() << " board: " << r.at("sites") << " sites, " << r.at("regions")
    << " regions, kernel dimension " << r.at("kernel_dimension") << "\n";
  s << solve_text(r.at("solve"));
  for (const auto &e : r.at("changeability"))
    s << e.at("name").get<std::string>() << (e.at("changeable").get<bool>() ? " changeable" : " unchangeable")
      << "\n";
  if (r.contains("proper"))
    s << "proper link: " << (r.at("proper").get<bool>() ? "yes" : "no") << "\n";
  if (r.contains("tangle") && r.at("tangle").contains("even_components"))
    s << "even components: " << join(r.at("tangle").at("even_components")) << "\n";
  if (r.contains("foldability"))
    s << "flat-foldability conditions: " << (r.at("foldability").value("pass", false) ? "hold" : "fail")
      << " (necessary, not sufficient)\n";
  return s.str();
}

std::string unlink_text(const json &r) {
  std::ostringstream s;
  auto show = [](const json &v) { return v.is_null() ? std::string("not certified") : "<= " + v.dump(); };
  s << "crossings " << r.at("crossings") << ", components " << r.at("components") << "\n";
  s << "unlinking number u(D) " << show(r.at("u_upper")) << "\n";
  s << "circled region unlinking number " << show(r.at("u_circled_upper")) << "\n";
  if (!r.at("witness_moves").is_null())
    s << "regions " << join(r.at("witness_moves").at("regions")) << " change crossings "
      << join(r.at("witness_moves").at("crossings_changed")) << "\n";
  return s.str();
}

} // namespace regsel
