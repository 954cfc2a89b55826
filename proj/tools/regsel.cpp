// regsel: Region Select engine on the command line.
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "regsel/error.hpp"
#include "regsel/foldability.hpp"
#include "regsel/report.hpp"
#include "regsel/service.hpp"
#include "regsel/tangle.hpp"

using nlohmann::json;

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw regsel::Error("io_error", "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Common {
  std::string path;
  std::string format = "text";
  std::size_t budget = regsel::kDefaultWeightBudget;
};

void add_common(CLI::App *cmd, Common &c, bool with_budget = true) {
  cmd->add_option("file", c.path, "Board, PD, FOLD or disk file")->required();
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  if (with_budget)
    cmd->add_option("--budget", c.budget, "Search budget (max weight or moves)");
}

void emit(const Common &c, const json &j, const std::string &text) {
  if (c.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

regsel::Service *running = nullptr;

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Region Select and region crossing change engine"};
  app.require_subcommand(1);

  Common analyze, solve, tangle, fold, unlink;
  bool certificate = false, strict = false;
  std::string circle_arg, snapshot;
  int max_path = 6;
  int port = 8080;
  std::string static_dir;
  double ttl_hours = 24;

  auto *a = app.add_subcommand("analyze", "Solvability, changeability and structure report");
  add_common(a, analyze);
  auto *s = app.add_subcommand("solve", "Solving region set or infeasibility certificate");
  add_common(s, solve);
  s->add_flag("--certificate", certificate, "Print the certificate when unsolvable and exit 0");
  auto *t = app.add_subcommand("tanglize", "Decompose a crease pattern or disk diagram into components");
  add_common(t, tangle, false);
  t->add_flag("--strict", strict, "Reject components ending on the sheet boundary");
  auto *f = app.add_subcommand("foldcheck", "Necessary flat-foldability conditions");
  add_common(f, fold, false);
  auto *u = app.add_subcommand("unlink", "Classical and circled region unlinking numbers");
  add_common(u, unlink);
  unlink.budget = 0;
  u->add_option("--circle", circle_arg, "Circle as a JSON transit list or a file containing one");
  u->add_option("--max-path", max_path, "Dual path length limit for generated circles");
  auto *v = app.add_subcommand("serve", "HTTP API and static UI");
  if (const char *p = std::getenv("REGSEL_PORT"))
    port = std::atoi(p);
  if (const char *d = std::getenv("REGSEL_STATIC_DIR"))
    static_dir = d;
  v->add_option("--port", port, "Port (REGSEL_PORT)");
  v->add_option("--static", static_dir, "Static asset directory (REGSEL_STATIC_DIR)");
  v->add_option("--snapshot", snapshot, "Session snapshot file, loaded at start and written on exit");
  v->add_option("--ttl-hours", ttl_hours, "Idle session expiry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (a->parsed()) {
      auto r = regsel::analyze_report(regsel::load_board_file(analyze.path), analyze.budget);
      emit(analyze, r, regsel::analyze_text(r));
    } else if (s->parsed()) {
      regsel::GameInstance g(regsel::load_board_file(solve.path));
      auto r = regsel::solve_report(g, solve.budget);
      bool ok = r["solved"].get<bool>();
      if (!ok && !certificate) {
        std::cerr << "unsolvable (rerun with --certificate for the proof)\n";
        return 2;
      }
      emit(solve, r, regsel::solve_text(r));
    } else if (t->parsed()) {
      auto tg = regsel::tanglize(regsel::load_board_file(tangle.path), strict);
      auto r = regsel::tangle_to_json(tg);
      emit(tangle, r, r.dump(2) + "\n");
    } else if (f->parsed()) {
      auto b = regsel::load_board_file(fold.path);
      if (!b.crease)
        throw regsel::Error("wrong_kind", "foldcheck needs a crease pattern");
      auto rep = regsel::check_flat_foldable_necessary(*b.crease);
      auto r = regsel::fold_report_to_json(rep);
      std::string text = std::string(rep.pass ? "conditions hold" : "conditions fail") +
                         " (necessary, not sufficient)\n";
      for (const auto &vr : rep.vertices)
        if (!vr.pass())
          text += "vertex " + std::to_string(vr.vertex) + ": degree " + std::to_string(vr.degree) +
                  (vr.even_degree ? ", alternating sums " : ", odd degree") +
                  (vr.even_degree ? std::to_string(vr.alternating_sum_odd) + " / " +
                                        std::to_string(vr.alternating_sum_even)
                                  : "") +
                  "\n";
      emit(fold, r, text);
    } else if (u->parsed()) {
      auto b = regsel::load_board_file(unlink.path);
      if (!b.link)
        throw regsel::Error("wrong_kind", "unlink needs a link diagram");
      regsel::UnlinkOptions opt;
      opt.budget = unlink.budget > 0 ? static_cast<int>(unlink.budget) : -1;
      opt.max_path = max_path;
      if (!circle_arg.empty()) {
        auto first = circle_arg.find_first_not_of(" \t");
        std::string text = first != std::string::npos && (circle_arg[first] == '[' || circle_arg[first] == '{')
                               ? circle_arg
                               : read_file(circle_arg);
        opt.circle = regsel::circle_from_json(json::parse(text));
      }
      auto r = regsel::unlink_report(*b.link, opt);
      emit(unlink, r, regsel::unlink_text(r));
    } else if (v->parsed()) {
      regsel::ServiceOptions opt;
      opt.static_dir = static_dir;
      opt.snapshot_path = snapshot;
      opt.idle_ttl = std::chrono::seconds(static_cast<long>(ttl_hours * 3600));
      regsel::Service svc(opt);
      int bound = svc.bind("0.0.0.0", port);
      if (bound < 0) {
        std::cerr << "error[port_busy]: cannot bind port " << port << "\n";
        return 1;
      }
      running = &svc;
      std::signal(SIGINT, [](int) { running->stop(); });
      std::signal(SIGTERM, [](int) { running->stop(); });
      std::cerr << "listening on port " << bound << "\n";
      svc.run();
    }
  } catch (const regsel::Error &e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
    return 1;
  } catch (const json::exception &e) {
    std::cerr << "error[bad_json]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
