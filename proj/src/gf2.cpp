#include "regsel/gf2.hpp"

#include <algorithm>
#include <bit>

#include "regsel/error.hpp"

namespace regsel {

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw Error("bad_bits", "bit string may only contain '0' and '1'");
  }
  return v;
}

BitVec BitVec::from_indices(std::size_t n, const std::vector<std::size_t> &idx) {
  BitVec v(n);
  for (auto i : idx) {
    if (i >= n)
      throw Error("index_out_of_range", "bit index " + std::to_string(i) + " out of range");
    v.set(i);
  }
  return v;
}

BitVec &BitVec::operator^=(const BitVec &o) {
  if (o.size_ != size_)
    throw Error("dimension_mismatch", "bit vector sizes differ");
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] ^= o.words_[i];
  return *this;
}

bool BitVec::dot(const BitVec &o) const {
  if (o.size_ != size_)
    throw Error("dimension_mismatch", "bit vector sizes differ");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    acc ^= words_[i] & o.words_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVec::weight() const {
  std::size_t w = 0;
  for (auto word : words_)
    w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVec::none() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

BitVec BitVec::complement() const {
  BitVec r(size_);
  for (std::size_t i = 0; i < size_; ++i)
    r.set(i, !get(i));
  return r;
}

std::vector<std::size_t> BitVec::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i))
      out.push_back(i);
  return out;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i))
      s[i] = '1';
  return s;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string> &rows) {
  Gf2Matrix m;
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  for (const auto &r : rows) {
    if (r.size() != m.cols_)
      throw Error("ragged_matrix", "matrix rows must have equal length");
    m.rows_.push_back(BitVec::from_string(r));
  }
  return m;
}

BitVec Gf2Matrix::column(std::size_t c) const {
  BitVec v(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    v.set(r, rows_[r].get(c));
  return v;
}

BitVec Gf2Matrix::multiply(const BitVec &x) const {
  if (x.size() != cols_)
    throw Error("dimension_mismatch", "vector length does not match matrix columns");
  BitVec y(rows());
  for (std::size_t r = 0; r < rows(); ++r)
    y.set(r, rows_[r].dot(x));
  return y;
}

BitVec Gf2Matrix::left_multiply(const BitVec &y) const {
  if (y.size() != rows())
    throw Error("dimension_mismatch", "vector length does not match matrix rows");
  BitVec out(cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    if (y.get(r))
      out ^= rows_[r];
  return out;
}

std::vector<std::string> Gf2Matrix::to_strings() const {
  std::vector<std::string> out;
  for (const auto &r : rows_)
    out.push_back(r.to_string());
  return out;
}

namespace {

// Row-reduced echelon form of [A | b] with every row remembering which
// original rows were summed into it.
struct Reduction {
  std::vector<BitVec> rows;
  std::vector<bool> rhs;
  std::vector<BitVec> provenance;
  std::vector<std::size_t> pivot_cols; // pivot column of rows[0..rank)
};

Reduction reduce(const Gf2Matrix &a, const BitVec &b) {
  Reduction red;
  const auto m = a.rows();
  for (std::size_t r = 0; r < m; ++r) {
    red.rows.push_back(a.row(r));
    red.rhs.push_back(b.get(r));
    red.provenance.push_back(BitVec::unit(m, r));
  }
  std::size_t next = 0;
  for (std::size_t c = 0; c < a.cols() && next < m; ++c) {
    std::size_t p = next;
    while (p < m && !red.rows[p].get(c))
      ++p;
    if (p == m)
      continue;
    std::swap(red.rows[p], red.rows[next]);
    std::swap(red.provenance[p], red.provenance[next]);
    bool t = red.rhs[p];
    red.rhs[p] = red.rhs[next];
    red.rhs[next] = t;
    for (std::size_t r = 0; r < m; ++r) {
      if (r != next && red.rows[r].get(c)) {
        red.rows[r] ^= red.rows[next];
        red.provenance[r] ^= red.provenance[next];
        red.rhs[r] = red.rhs[r] != red.rhs[next];
      }
    }
    red.pivot_cols.push_back(c);
    ++next;
  }
  return red;
}

} // namespace

std::size_t Gf2Matrix::rank() const { return reduce(*this, BitVec(rows())).pivot_cols.size(); }

SolveOutcome solve(const Gf2Matrix &a, const BitVec &b) {
  if (b.size() != a.rows())
    throw Error("dimension_mismatch", "right-hand side length does not match matrix rows");
  const auto red = reduce(a, b);
  const auto rank = red.pivot_cols.size();
  SolveOutcome out;
  for (std::size_t r = rank; r < red.rows.size(); ++r) {
    if (red.rhs[r]) {
      out.status = SolveStatus::infeasible;
      out.certificate = red.provenance[r];
      return out;
    }
  }
  out.status = SolveStatus::solved;
  out.particular = BitVec(a.cols());
  for (std::size_t r = 0; r < rank; ++r)
    if (red.rhs[r])
      out.particular.set(red.pivot_cols[r]);

  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : red.pivot_cols)
    is_pivot[c] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f])
      continue;
    BitVec k(a.cols());
    k.set(f);
    for (std::size_t r = 0; r < rank; ++r)
      if (red.rows[r].get(f))
        k.set(red.pivot_cols[r]);
    out.kernel_basis.push_back(std::move(k));
  }
  return out;
}

SolveOutcome solve_constrained(const Gf2Matrix &a, const BitVec &b,
                               const std::vector<std::size_t> &forced_one,
                               const std::vector<std::size_t> &forced_zero) {
  if (b.size() != a.rows())
    throw Error("dimension_mismatch", "right-hand side length does not match matrix rows");
  std::vector<int> forced(a.cols(), -1);
  for (auto c : forced_one) {
    if (c >= a.cols())
      throw Error("index_out_of_range", "forced column out of range");
    forced[c] = 1;
  }
  for (auto c : forced_zero) {
    if (c >= a.cols())
      throw Error("index_out_of_range", "forced column out of range");
    if (forced[c] == 1)
      throw Error("constraint_overlap", "column " + std::to_string(c) + " is both forced to 1 and to 0");
    forced[c] = 0;
  }

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (forced[c] < 0)
      free_cols.push_back(c);

  BitVec rhs = b;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (forced[c] == 1)
      rhs ^= a.column(c);

  Gf2Matrix reduced(a.rows(), free_cols.size());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < free_cols.size(); ++j)
      reduced.set(r, j, a.get(r, free_cols[j]));

  auto inner = solve(reduced, rhs);
  if (!inner.solved())
    return inner;

  auto lift = [&](const BitVec &x, bool with_forced) {
    BitVec full(a.cols());
    for (std::size_t j = 0; j < free_cols.size(); ++j)
      full.set(free_cols[j], x.get(j));
    if (with_forced)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (forced[c] == 1)
          full.set(c);
    return full;
  };
  SolveOutcome out;
  out.status = SolveStatus::solved;
  out.particular = lift(inner.particular, true);
  for (const auto &k : inner.kernel_basis)
    out.kernel_basis.push_back(lift(k, false));
  return out;
}

bool lex_less(const BitVec &a, const BitVec &b) {
  auto ia = a.indices();
  auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

namespace {

bool better(const BitVec &cand, const std::optional<BitVec> &best) {
  if (!best)
    return true;
  auto wc = cand.weight(), wb = best->weight();
  return wc < wb || (wc == wb && lex_less(cand, *best));
}

// Visits every subset of {0..n-1} of size k in lexicographic order; stops
// when the visitor returns true.
template <typename F> bool for_each_combination(std::size_t n, std::size_t k, F &&visit) {
  if (k > n)
    return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  while (true) {
    if (visit(idx))
      return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1))
      --i;
    if (i == 0)
      return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

std::optional<BitVec> min_weight_in_coset(const BitVec &particular, const std::vector<BitVec> &kernel,
                                          std::size_t budget) {
  std::optional<BitVec> best;
  if (kernel.size() <= kCosetEnumerationLimit) {
    // Gray-code walk over the coset.
    BitVec cur = particular;
    if (better(cur, best))
      best = cur;
    const std::uint64_t total = std::uint64_t{1} << kernel.size();
    for (std::uint64_t i = 1; i < total; ++i) {
      cur ^= kernel[static_cast<std::size_t>(std::countr_zero(i))];
      if (better(cur, best))
        best = cur;
    }
    if (best && best->weight() > budget)
      return std::nullopt;
    return best;
  }
  return std::nullopt;
}

std::optional<BitVec> min_weight_solution(const Gf2Matrix &a, const BitVec &b, std::size_t budget) {
  auto outcome = solve(a, b);
  if (!outcome.solved())
    return std::nullopt;
  if (outcome.kernel_basis.size() <= kCosetEnumerationLimit)
    return min_weight_in_coset(outcome.particular, outcome.kernel_basis, budget);

  // Kernel too large to enumerate: search column subsets by increasing weight.
  std::optional<BitVec> found;
  for (std::size_t w = 0; w <= std::min(budget, a.cols()) && !found; ++w) {
    for_each_combination(a.cols(), w, [&](const std::vector<std::size_t> &idx) {
      BitVec x = BitVec::from_indices(a.cols(), idx);
      if (a.multiply(x) == b) {
        found = std::move(x);
        return true;
      }
      return false;
    });
  }
  return found;
}

} // namespace regsel
