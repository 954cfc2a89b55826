#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regsel/error.hpp"
#include "regsel/foldability.hpp"
#include "regsel/report.hpp"
#include "regsel/tangle.hpp"

namespace py = pybind11;

namespace {

std::string py_analyze(const std::string &text, std::size_t budget) {
  return regsel::analyze_report(regsel::parse_board_text(text), budget).dump();
}

std::string py_solve(const std::string &text, std::size_t budget) {
  return regsel::solve_report(regsel::GameInstance(regsel::parse_board_text(text)), budget).dump();
}

std::string py_tanglize(const std::string &text, bool strict) {
  return regsel::tangle_to_json(regsel::tanglize(regsel::parse_board_text(text), strict)).dump();
}

std::string py_foldcheck(const std::string &text) {
  auto b = regsel::parse_board_text(text);
  if (!b.crease)
    throw regsel::Error("wrong_kind", "foldcheck needs a crease pattern");
  return regsel::fold_report_to_json(regsel::check_flat_foldable_necessary(*b.crease)).dump();
}

std::string py_unlink(const std::string &pd, int budget, const std::string &circle) {
  regsel::UnlinkOptions opt;
  opt.budget = budget;
  if (!circle.empty())
    opt.circle = regsel::circle_from_json(nlohmann::json::parse(circle));
  return regsel::unlink_report(regsel::parse_pd(pd), opt).dump();
}

class Game {
public:
  explicit Game(const std::string &text) : g_(regsel::parse_board_text(text)) {}
  void play(int region) { g_ = g_.apply_rcc(region); }
  std::string lamps() const { return g_.lamps().to_string(); }
  std::vector<int> history() const { return g_.history(); }
  bool won() const { return g_.won(); }
  std::string board() const { return regsel::board_to_json(g_.board()).dump(); }
  std::string hint(std::size_t budget) const { return regsel::solve_report(g_, budget).dump(); }

private:
  regsel::GameInstance g_;
};

} // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<regsel::Error> error(m, "RegselError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const regsel::Error &e) {
      PyErr_SetString(error.ptr(), (e.code() + ": " + e.what()).c_str());
    } catch (const nlohmann::json::exception &e) {
      PyErr_SetString(error.ptr(), (std::string("bad_json: ") + e.what()).c_str());
    }
  });
  m.def("analyze", &py_analyze, py::arg("text"), py::arg("budget") = regsel::kDefaultWeightBudget);
  m.def("solve", &py_solve, py::arg("text"), py::arg("budget") = regsel::kDefaultWeightBudget);
  m.def("tanglize", &py_tanglize, py::arg("text"), py::arg("strict") = false);
  m.def("foldcheck", &py_foldcheck, py::arg("text"));
  m.def("unlink", &py_unlink, py::arg("pd"), py::arg("budget") = -1, py::arg("circle") = "");
  py::class_<Game>(m, "Game")
      .def(py::init<const std::string &>())
      .def("play", &Game::play)
      .def_property_readonly("lamps", &Game::lamps)
      .def_property_readonly("history", &Game::history)
      .def_property_readonly("won", &Game::won)
      .def("board", &Game::board)
      .def("hint", &Game::hint, py::arg("budget") = regsel::kDefaultWeightBudget);
}
