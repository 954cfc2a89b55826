#include "regsel/link.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "regsel/error.hpp"

namespace regsel {

namespace {

struct End {
  int crossing;
  int position;
};

std::map<int, std::vector<End>> collect_ends(const std::vector<PdCrossing> &xs) {
  std::map<int, std::vector<End>> ends;
  for (std::size_t x = 0; x < xs.size(); ++x)
    for (int p = 0; p < 4; ++p)
      ends[xs[x].edges[p]].push_back({static_cast<int>(x), p});
  for (const auto &[label, v] : ends)
    if (v.size() != 2)
      throw Error("bad_labels", "edge label " + std::to_string(label) + " appears " +
                                    std::to_string(v.size()) + " time(s), expected 2");
  return ends;
}

bool is_incoming(const PdCrossing &c, int p) { return p == 0 || p == c.over_in; }

} // namespace

LinkDiagram::LinkDiagram(std::vector<PdCrossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0)
    throw Error("bad_labels", "negative free loop count");
  for (const auto &c : crossings_)
    if (c.over_in != 1 && c.over_in != 3)
      throw Error("bad_orientation", "over strand must enter at position 1 or 3");
  auto ends = collect_ends(crossings_);
  for (const auto &[label, v] : ends) {
    bool in0 = is_incoming(crossings_[v[0].crossing], v[0].position);
    bool in1 = is_incoming(crossings_[v[1].crossing], v[1].position);
    if (in0 == in1)
      throw Error("bad_orientation", "edge " + std::to_string(label) + " has inconsistent orientation");
  }
  build();
}

void LinkDiagram::build() {
  const int n = crossing_count();
  auto ends = collect_ends(crossings_);
  const int darts = 4 * n + 2 * free_loops_;
  std::vector<int> opposite(darts, -1);
  std::vector<std::vector<int>> rotations;
  for (int x = 0; x < n; ++x)
    rotations.push_back({4 * x, 4 * x + 1, 4 * x + 2, 4 * x + 3});
  for (const auto &[label, v] : ends) {
    int a = dart(v[0].crossing, v[0].position), b = dart(v[1].crossing, v[1].position);
    opposite[a] = b;
    opposite[b] = a;
  }
  for (int i = 0; i < free_loops_; ++i) {
    int a = 4 * n + 2 * i, b = a + 1;
    opposite[a] = b;
    opposite[b] = a;
    rotations.push_back({a, b});
  }
  map_ = PlanarDiagram(std::move(rotations), std::move(opposite), SurfaceKind::sphere);

  edge_label_.assign(map_.edge_count(), 0);
  label_index_.clear();
  for (std::size_t e = 0; e < map_.edge_count(); ++e) {
    int d = map_.edge_darts(static_cast<int>(e)).first;
    if (d < 4 * n) {
      edge_label_[e] = crossings_[d / 4].edges[d % 4];
      label_index_.emplace_back(edge_label_[e], static_cast<int>(e));
    } else {
      edge_label_[e] = -1 - (d - 4 * n) / 2; // free loops get negative pseudo-labels
    }
  }
  std::sort(label_index_.begin(), label_index_.end());

  // Components: follow each label to its incoming end and continue straight through.
  components_.clear();
  label_component_.clear();
  std::set<int> seen;
  for (const auto &[start, v] : ends) {
    if (seen.count(start))
      continue;
    std::vector<int> comp;
    int label = start;
    while (!seen.count(label)) {
      seen.insert(label);
      comp.push_back(label);
      const auto &ev = ends.at(label);
      End head = is_incoming(crossings_[ev[0].crossing], ev[0].position) ? ev[0] : ev[1];
      label = crossings_[head.crossing].edges[(head.position + 2) % 4];
    }
    int cid = static_cast<int>(components_.size());
    for (int l : comp)
      label_component_.emplace_back(l, cid);
    components_.push_back(std::move(comp));
  }
  for (int i = 0; i < free_loops_; ++i)
    components_.emplace_back();
  std::sort(label_component_.begin(), label_component_.end());
}

LinkDiagram LinkDiagram::from_pd(const std::vector<std::array<int, 4>> &tuples, int free_loops) {
  std::vector<PdCrossing> xs;
  for (const auto &t : tuples)
    xs.push_back({t, 0});
  auto ends = collect_ends(xs);

  // Undirected strand cycles through position pairs (0,2) and (1,3).
  std::set<int> seen;
  std::vector<int> over_in(xs.size(), 0);
  auto other_end = [&](int label, End e) {
    const auto &v = ends.at(label);
    return (v[0].crossing == e.crossing && v[0].position == e.position) ? v[1] : v[0];
  };
  for (const auto &[start, v0] : ends) {
    if (seen.count(start))
      continue;
    // Walk starting by entering v0[1] via `start` (direction chosen arbitrarily).
    struct Step {
      int label;
      End enter;
    };
    std::vector<Step> steps;
    int label = start;
    End enter = v0[1];
    while (true) {
      steps.push_back({label, enter});
      seen.insert(label);
      int next_label = xs[enter.crossing].edges[(enter.position + 2) % 4];
      End leave{enter.crossing, (enter.position + 2) % 4};
      End next_enter = other_end(next_label, leave);
      label = next_label;
      enter = next_enter;
      if (label == start && enter.crossing == steps.front().enter.crossing &&
          enter.position == steps.front().enter.position)
        break;
      if (steps.size() > 4 * xs.size() + 2)
        throw Error("bad_labels", "strand tracing did not close");
    }
    // Orientation from under-passages: entering at position 0 means forward.
    int vote = 0;
    for (const auto &s : steps) {
      if (s.enter.position == 0 || s.enter.position == 2) {
        int dir = s.enter.position == 0 ? 1 : -1;
        if (vote != 0 && vote != dir)
          throw Error("bad_orientation", "component through edge " + std::to_string(start) +
                                             " passes under in both directions");
        vote = dir;
      }
    }
    if (vote == 0) {
      // All-over component: prefer the direction in which labels increase.
      int forward = 0;
      for (std::size_t i = 0; i < steps.size(); ++i) {
        int a = steps[i].label, b = steps[(i + 1) % steps.size()].label;
        forward += (b == a + 1) ? 1 : (a == b + 1 ? -1 : 0);
      }
      vote = forward >= 0 ? 1 : -1;
    }
    for (const auto &s : steps) {
      if (s.enter.position == 1 || s.enter.position == 3) {
        int in = vote == 1 ? s.enter.position : (s.enter.position + 2) % 4;
        over_in[s.enter.crossing] = in;
      }
    }
  }
  for (std::size_t x = 0; x < xs.size(); ++x)
    xs[x].over_in = over_in[x];
  return LinkDiagram(std::move(xs), free_loops);
}

LinkDiagram LinkDiagram::from_braid(const std::vector<int> &word, int strands) {
  if (strands < 1)
    throw Error("bad_braid", "braid needs at least one strand");
  int next = 1;
  std::vector<int> initial(strands), current(strands);
  for (int i = 0; i < strands; ++i)
    initial[i] = current[i] = next++;
  std::vector<PdCrossing> xs;
  for (int g : word) {
    int k = std::abs(g);
    if (k < 1 || k >= strands)
      throw Error("bad_braid", "generator " + std::to_string(g) + " out of range");
    int l_in = current[k - 1], r_in = current[k];
    int tl = next++, tr = next++;
    if (g > 0)
      xs.push_back({{r_in, tr, tl, l_in}, 3});
    else
      xs.push_back({{l_in, r_in, tr, tl}, 1});
    current[k - 1] = tl;
    current[k] = tr;
  }
  // Close: the top label at each position is identified with the bottom one.
  std::map<int, int> rename;
  int loops = 0;
  for (int i = 0; i < strands; ++i)
    if (current[i] != initial[i])
      rename[current[i]] = initial[i];
  std::vector<bool> touched(strands, false);
  for (int g : word)
    touched[std::abs(g) - 1] = touched[std::abs(g)] = true;
  for (int i = 0; i < strands; ++i)
    if (!touched[i])
      ++loops;
  for (auto &c : xs)
    for (auto &e : c.edges) {
      auto it = rename.find(e);
      if (it != rename.end())
        e = it->second;
    }
  return LinkDiagram(std::move(xs), loops).canonical();
}

int LinkDiagram::component_of_label(int label) const {
  auto it = std::lower_bound(label_component_.begin(), label_component_.end(), std::pair{label, -1});
  if (it == label_component_.end() || it->first != label)
    throw Error("unknown_label", "no edge labelled " + std::to_string(label));
  return it->second;
}

int LinkDiagram::edge_of_label(int label) const {
  auto it = std::lower_bound(label_index_.begin(), label_index_.end(), std::pair{label, -1});
  if (it == label_index_.end() || it->first != label)
    throw Error("unknown_label", "no edge labelled " + std::to_string(label));
  return it->second;
}

int LinkDiagram::linking_number(int i, int j) const {
  int sum = 0;
  for (int x = 0; x < crossing_count(); ++x) {
    int a = under_component(x), b = over_component(x);
    if ((a == i && b == j) || (a == j && b == i))
      sum += crossings_[x].sign();
  }
  return sum / 2;
}

LinkDiagram LinkDiagram::with_changes(const std::vector<int> &changes) const {
  auto xs = crossings_;
  for (int x : changes) {
    if (x < 0 || x >= crossing_count())
      throw Error("unknown_crossing", "crossing " + std::to_string(x) + " out of range");
    auto &c = xs[x];
    const auto e = c.edges;
    if (c.over_in == 3)
      c = {{e[3], e[0], e[1], e[2]}, 1};
    else
      c = {{e[1], e[2], e[3], e[0]}, 3};
  }
  return LinkDiagram(std::move(xs), free_loops_);
}

LinkDiagram LinkDiagram::canonical() const {
  std::map<int, int> relabel;
  int next = 1;
  for (const auto &comp : components_)
    for (int l : comp)
      relabel[l] = next++;
  auto xs = crossings_;
  for (auto &c : xs)
    for (auto &e : c.edges)
      e = relabel.at(e);
  return LinkDiagram(std::move(xs), free_loops_);
}

int LinkDiagram::max_label() const {
  int m = 0;
  for (const auto &c : crossings_)
    for (int e : c.edges)
      m = std::max(m, e);
  return m;
}

std::string LinkDiagram::to_pd() const {
  std::ostringstream os;
  for (const auto &c : crossings_)
    os << "X(" << c.edges[0] << ',' << c.edges[1] << ',' << c.edges[2] << ',' << c.edges[3] << ")\n";
  for (int i = 0; i < free_loops_; ++i)
    os << "O\n";
  return os.str();
}

LinkDiagram parse_pd(std::string_view text) {
  std::vector<std::array<int, 4>> tuples;
  int loops = 0;
  static const std::regex tuple_re(R"(X\s*[\(\[]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\)\]])");
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto first = line.find_first_not_of(" \t\r,");
    if (first == std::string::npos)
      continue;
    std::string rest = line.substr(first);
    if (rest[0] == 'O') {
      ++loops;
      continue;
    }
    auto begin = std::sregex_iterator(rest.begin(), rest.end(), tuple_re);
    std::size_t consumed = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
      const auto &m = *it;
      if (rest.substr(consumed, m.position() - consumed).find_first_not_of(" \t\r,") != std::string::npos)
        throw Error("parse_error", "line " + std::to_string(lineno) + ": unexpected text before crossing");
      tuples.push_back({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])});
      consumed = m.position() + m.length();
    }
    if (rest.substr(consumed).find_first_not_of(" \t\r,") != std::string::npos)
      throw Error("parse_error", "line " + std::to_string(lineno) + ": expected X(a,b,c,d)");
  }
  return LinkDiagram::from_pd(tuples, loops);
}

} // namespace regsel
