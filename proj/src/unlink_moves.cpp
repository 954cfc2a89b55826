#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "regsel/error.hpp"
#include "regsel/planar.hpp"
#include "regsel/unlink.hpp"

namespace regsel {

namespace {

std::vector<std::vector<int>> trace_faces(const PlanarDiagram &m) {
  std::vector<int> seen(m.dart_count(), 0);
  std::vector<std::vector<int>> faces;
  for (std::size_t s = 0; s < m.dart_count(); ++s) {
    if (seen[s])
      continue;
    std::vector<int> f;
    for (int d = static_cast<int>(s); !seen[d]; d = m.next_ccw(m.opposite(d))) {
      seen[d] = 1;
      f.push_back(d);
    }
    faces.push_back(std::move(f));
  }
  return faces;
}

// Drops crossings `gone`, merges labels pairwise, and turns every merged
// class left without a crossing into a free loop.
LinkDiagram rebuild(const LinkDiagram &d, const std::vector<int> &gone,
                    const std::vector<std::pair<int, int>> &unions) {
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x)
      return x;
    return it->second = find(it->second);
  };
  for (auto [a, b] : unions) {
    parent.emplace(a, a);
    parent.emplace(b, b);
    int ra = find(a), rb = find(b);
    if (ra != rb)
      parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<PdCrossing> xs;
  std::set<int> used;
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (std::find(gone.begin(), gone.end(), x) != gone.end())
      continue;
    PdCrossing c = d.crossings()[x];
    for (int &l : c.edges) {
      l = find(l);
      used.insert(l);
    }
    xs.push_back(c);
  }
  std::set<int> roots;
  for (const auto &[l, p] : parent)
    roots.insert(find(l));
  int loops = d.free_loops();
  for (int r : roots)
    if (!used.count(r))
      ++loops;
  return LinkDiagram(std::move(xs), loops);
}

const std::array<int, 4> &labels(const LinkDiagram &d, int x) { return d.crossings()[x].edges; }

struct FaceInfo {
  std::vector<int> crossings, positions, back_positions, edge_labels;
};

// Faces bounded by k darts at k distinct crossings.
std::vector<FaceInfo> small_faces(const LinkDiagram &d, std::size_t k) {
  std::vector<FaceInfo> out;
  const int n = d.crossing_count();
  for (const auto &f : trace_faces(d.map())) {
    if (f.size() != k)
      continue;
    FaceInfo fi;
    bool ok = true;
    for (int dart : f) {
      int o = d.map().opposite(dart);
      if (dart >= 4 * n || o >= 4 * n) {
        ok = false;
        break;
      }
      fi.crossings.push_back(dart / 4);
      fi.positions.push_back(dart % 4);
      fi.back_positions.push_back(o % 4);
      fi.edge_labels.push_back(labels(d, dart / 4)[dart % 4]);
    }
    std::set<int> distinct(fi.crossings.begin(), fi.crossings.end());
    if (ok && distinct.size() == k)
      out.push_back(std::move(fi));
  }
  return out;
}

bool same_set(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::optional<LinkDiagram> do_r1(const LinkDiagram &d, int loop) {
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto &e = labels(d, x);
    for (int p = 0; p < 4; ++p)
      if (e[p] == loop && e[(p + 1) % 4] == loop)
        return rebuild(d, {x}, {{e[(p + 2) % 4], e[(p + 3) % 4]}});
  }
  return std::nullopt;
}

bool r2_valid(const LinkDiagram &d, const FaceInfo &f) {
  // Strand of the first bigon edge is over at both ends or under at both.
  if (f.positions[0] % 2 != f.back_positions[0] % 2)
    return false;
  for (int k = 0; k < 2; ++k) {
    const auto &ex = labels(d, f.crossings[k]);
    for (int l : f.edge_labels)
      if (ex[(f.positions[k] + 2) % 4] == l || ex[(f.back_positions[1 - k] + 2) % 4] == l)
        return false;
  }
  return true;
}

LinkDiagram do_r2(const LinkDiagram &d, const FaceInfo &f) {
  // Edge k runs from crossing k to crossing 1-k.
  std::vector<std::pair<int, int>> unions;
  for (int k = 0; k < 2; ++k) {
    int from = f.crossings[k], to = f.crossings[1 - k];
    unions.emplace_back(labels(d, from)[(f.positions[k] + 2) % 4],
                        labels(d, to)[(f.back_positions[k] + 2) % 4]);
  }
  return rebuild(d, {f.crossings[0], f.crossings[1]}, unions);
}

bool r3_valid(const FaceInfo &f) {
  for (int k = 0; k < 3; ++k)
    if (f.positions[k] % 2 == f.back_positions[k] % 2)
      return true;
  return false;
}

LinkDiagram do_r3(const LinkDiagram &d, const FaceInfo &f) {
  auto xs = d.crossings();
  const auto &old = d.crossings();
  for (int k = 0; k < 3; ++k) {
    int next = (k + 1) % 3, prev = (k + 2) % 3;
    int v = f.crossings[k];
    int pk = f.positions[k], qk = f.back_positions[prev];
    // Strand along edge k, towards crossing `next`.
    xs[v].edges[pk] = old[f.crossings[next]].edges[(f.back_positions[k] + 2) % 4];
    xs[v].edges[(pk + 2) % 4] = f.edge_labels[k];
    // Strand along edge prev, towards crossing `prev`.
    xs[v].edges[qk] = old[f.crossings[prev]].edges[(f.positions[prev] + 2) % 4];
    xs[v].edges[(qk + 2) % 4] = f.edge_labels[prev];
  }
  return LinkDiagram(std::move(xs), d.free_loops());
}

bool has_removal(const LinkDiagram &d) {
  return !available_moves(d, Move::Kind::r1).empty() || !available_moves(d, Move::Kind::r2).empty();
}

bool r3_search(const LinkDiagram &d, int depth, std::set<std::string> &seen, std::vector<Move> &path) {
  if (!path.empty() && has_removal(d))
    return true;
  if (depth == 0)
    return false;
  for (const auto &m : available_moves(d, Move::Kind::r3)) {
    LinkDiagram next;
    try {
      next = apply_move(d, m);
    } catch (const Error &) {
      continue;
    }
    if (!seen.insert(next.to_pd()).second)
      continue;
    path.push_back(m);
    path.back().crossings_after = next.crossing_count();
    if (r3_search(next, depth - 1, seen, path))
      return true;
    path.pop_back();
  }
  return false;
}

} // namespace

std::vector<Move> available_moves(const LinkDiagram &d, Move::Kind kind) {
  std::vector<Move> out;
  if (kind == Move::Kind::r1) {
    std::set<int> loops;
    for (int x = 0; x < d.crossing_count(); ++x) {
      const auto &e = labels(d, x);
      for (int p = 0; p < 4; ++p)
        if (e[p] == e[(p + 1) % 4])
          loops.insert(e[p]);
    }
    for (int l : loops)
      out.push_back({kind, {l}, 0});
  } else if (kind == Move::Kind::r2) {
    for (const auto &f : small_faces(d, 2))
      if (r2_valid(d, f))
        out.push_back({kind, f.edge_labels, 0});
  } else {
    for (const auto &f : small_faces(d, 3))
      if (r3_valid(f))
        out.push_back({kind, f.edge_labels, 0});
  }
  return out;
}

LinkDiagram apply_move(const LinkDiagram &d, const Move &m) {
  if (m.kind == Move::Kind::r1) {
    if (m.labels.size() == 1)
      if (auto r = do_r1(d, m.labels[0]))
        return *r;
  } else {
    const std::size_t k = m.kind == Move::Kind::r2 ? 2 : 3;
    for (const auto &f : small_faces(d, k)) {
      if (!same_set(f.edge_labels, m.labels))
        continue;
      if (k == 2 && r2_valid(d, f))
        return do_r2(d, f);
      if (k == 3 && r3_valid(f))
        return do_r3(d, f);
    }
  }
  throw Error("bad_move", "move does not apply to this diagram");
}

TrivialityCertificate simplify(const LinkDiagram &d, int r3_depth) {
  TrivialityCertificate cert;
  LinkDiagram cur = d;
  const std::size_t cap = static_cast<std::size_t>(std::max(10, 10 * d.crossing_count()));
  auto take = [&](Move m) {
    cur = apply_move(cur, m);
    m.crossings_after = cur.crossing_count();
    cert.moves.push_back(std::move(m));
  };
  while (cur.crossing_count() > 0 && cert.moves.size() < cap) {
    if (auto ms = available_moves(cur, Move::Kind::r1); !ms.empty()) {
      take(ms.front());
      continue;
    }
    if (auto ms = available_moves(cur, Move::Kind::r2); !ms.empty()) {
      take(ms.front());
      continue;
    }
    std::vector<Move> path;
    bool found = false;
    for (int depth = 1; depth <= r3_depth && !found; ++depth) {
      std::set<std::string> seen{cur.to_pd()};
      path.clear();
      found = r3_search(cur, depth, seen, path);
    }
    if (!found)
      break;
    for (auto &m : path)
      take(m);
  }
  cert.trivial = cur.crossing_count() == 0;
  return cert;
}

int replay(const LinkDiagram &d, const TrivialityCertificate &cert) {
  LinkDiagram cur = d;
  for (const auto &m : cert.moves) {
    cur = apply_move(cur, m);
    if (cur.crossing_count() != m.crossings_after)
      throw Error("bad_certificate", "crossing count mismatch during replay");
  }
  return cur.crossing_count();
}

std::optional<long long> link_determinant(const LinkDiagram &d) {
  const auto &m = d.map();
  if (d.crossing_count() == 0 || d.free_loops() > 0 || m.component_count() != 1)
    return std::nullopt;
  const auto colour = checkerboard(m);
  std::vector<int> index(m.region_count(), -1);
  int w = 0;
  for (std::size_t r = 0; r < colour.size(); ++r)
    if (colour[r] == 0)
      index[r] = w++;
  std::vector<std::vector<__int128>> g(w, std::vector<__int128>(w, 0));
  for (int x = 0; x < d.crossing_count(); ++x) {
    // Corner (p-1, p) lies in the region of dart p.
    bool odd_white = colour[m.region_of(LinkDiagram::dart(x, 1))] == 0;
    int eta = odd_white ? -1 : 1;
    int a = index[m.region_of(LinkDiagram::dart(x, odd_white ? 1 : 0))];
    int b = index[m.region_of(LinkDiagram::dart(x, odd_white ? 3 : 2))];
    if (a == b)
      continue;
    g[a][b] -= eta;
    g[b][a] -= eta;
    g[a][a] += eta;
    g[b][b] += eta;
  }
  const int n = w - 1;
  if (n <= 0)
    return 1;
  // Bareiss elimination on the reduced matrix.
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && g[piv][k] == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != k) {
      std::swap(g[piv], g[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        g[i][j] = (g[i][j] * g[k][k] - g[i][k] * g[k][j]) / prev;
    prev = g[k][k];
  }
  __int128 det = g[n - 1][n - 1] * sign;
  return static_cast<long long>(det < 0 ? -det : det);
}

bool obviously_nontrivial(const LinkDiagram &d) {
  const int mu = d.component_count();
  for (int i = 0; i < mu; ++i)
    for (int j = i + 1; j < mu; ++j)
      if (d.linking_number(i, j) != 0)
        return true;
  if (auto det = link_determinant(d))
    return *det != (mu == 1 ? 1 : 0);
  return false;
}

ProperReport proper_link_check(const LinkDiagram &d) {
  ProperReport r;
  const int mu = d.component_count();
  for (int i = 0; i < mu; ++i) {
    int s = 0;
    for (int j = 0; j < mu; ++j)
      if (j != i)
        s += d.linking_number(i, j);
    r.linking_sums.push_back(s);
    r.component_proper.push_back(s % 2 == 0);
    r.proper = r.proper && s % 2 == 0;
  }
  return r;
}

} // namespace regsel
