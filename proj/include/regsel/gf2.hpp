#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace regsel {

/// Dense bit vector over GF(2).
class BitVec {
public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  /// Parses a string of '0'/'1' characters (other characters are rejected).
  static BitVec from_string(std::string_view bits);
  static BitVec unit(std::size_t n, std::size_t i) {
    BitVec v(n);
    v.set(i);
    return v;
  }
  static BitVec from_indices(std::size_t n, const std::vector<std::size_t> &idx);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) noexcept {
    if (v)
      words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    else
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

  BitVec &operator^=(const BitVec &o);
  friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }
  friend bool operator==(const BitVec &a, const BitVec &b) = default;

  /// Parity of the bitwise AND.
  bool dot(const BitVec &o) const;
  std::size_t weight() const;
  bool none() const;
  BitVec complement() const;
  std::vector<std::size_t> indices() const;
  std::string to_string() const;

  const std::vector<std::uint64_t> &words() const noexcept { return words_; }

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class Gf2Matrix {
public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}
  static Gf2Matrix from_rows(const std::vector<std::string> &rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVec &row(std::size_t r) const { return rows_[r]; }
  BitVec column(std::size_t c) const;

  BitVec multiply(const BitVec &x) const;
  /// xᵀ·A for a row selector x.
  BitVec left_multiply(const BitVec &y) const;
  std::size_t rank() const;
  std::vector<std::string> to_strings() const;

  friend bool operator==(const Gf2Matrix &, const Gf2Matrix &) = default;

private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

enum class SolveStatus { solved, infeasible };

struct SolveOutcome {
  SolveStatus status = SolveStatus::infeasible;
  BitVec particular;               // over columns, when solved
  std::vector<BitVec> kernel_basis; // over columns
  BitVec certificate;               // over rows, when infeasible

  bool solved() const noexcept { return status == SolveStatus::solved; }
};

SolveOutcome solve(const Gf2Matrix &a, const BitVec &b);

/// Solves A·x = b with x fixed to 1 on `forced_one` and to 0 on `forced_zero`.
/// The kernel basis is that of the reduced system, lifted with zeros on all
/// forced columns. Certificates refer to the reduced system (same rows).
SolveOutcome solve_constrained(const Gf2Matrix &a, const BitVec &b,
                               const std::vector<std::size_t> &forced_one,
                               const std::vector<std::size_t> &forced_zero);

inline constexpr std::size_t kCosetEnumerationLimit = 24;
inline constexpr std::size_t kDefaultWeightBudget = 16;

/// Minimum Hamming weight solution of A·x = b, ties broken by the
/// lexicographically smallest sorted column list. Returns nullopt when the
/// system is infeasible or every solution is heavier than `budget`.
std::optional<BitVec> min_weight_solution(const Gf2Matrix &a, const BitVec &b,
                                          std::size_t budget = kDefaultWeightBudget);

/// Same as min_weight_solution but over the affine space of a known outcome.
std::optional<BitVec> min_weight_in_coset(const BitVec &particular,
                                          const std::vector<BitVec> &kernel,
                                          std::size_t budget);

/// Strict order used for tie-breaking: sorted column lists compared lexicographically.
bool lex_less(const BitVec &a, const BitVec &b);

} // namespace regsel
