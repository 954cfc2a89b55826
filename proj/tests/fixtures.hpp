#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "regsel/board.hpp"
#include "regsel/link.hpp"

namespace fixtures {

inline std::string path(const std::string &name) { return std::string(REGSEL_DATA_DIR) + "/" + name; }

inline std::string read(const std::string &name) {
  std::ifstream in(path(name));
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline regsel::LinkDiagram pd(const std::string &name) { return regsel::parse_pd(read(name)); }

inline std::vector<std::string> with_prefix(const std::string &prefix) {
  std::vector<std::string> out;
  for (const auto &e : std::filesystem::directory_iterator(REGSEL_DATA_DIR)) {
    auto n = e.path().filename().string();
    if (n.rfind(prefix, 0) == 0)
      out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Closure of a random braid word that closes to a knot.
inline regsel::LinkDiagram random_knot(std::mt19937 &rng, int min_len = 3, int max_len = 10) {
  while (true) {
    int strands = 2 + static_cast<int>(rng() % 3);
    int len = min_len + static_cast<int>(rng() % (max_len - min_len + 1));
    std::vector<int> word;
    for (int i = 0; i < len; ++i) {
      int g = 1 + static_cast<int>(rng() % (strands - 1));
      word.push_back((rng() & 1) ? g : -g);
    }
    auto d = regsel::LinkDiagram::from_braid(word, strands);
    if (d.component_count() == 1 && d.crossing_count() > 0)
      return d;
  }
}

/// All region subsets toggling exactly `target` (brute force, small boards).
inline bool brute_solvable(const regsel::LampBoard &b, const regsel::BitVec &target) {
  const auto n = b.region_count();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    regsel::BitVec x(n);
    for (std::size_t j = 0; j < n; ++j)
      x.set(j, (m >> j) & 1);
    if (b.matrix.multiply(x) == target)
      return true;
  }
  return false;
}

} // namespace fixtures
