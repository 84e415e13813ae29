#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pbwtidx/collection.hpp"
#include "pbwtidx/permutations.hpp"
#include "pbwtidx/rank.hpp"

namespace pbwtidx {

/// Inclusive range [first, last] of lexicographic ranks, or Empty.
class Interval {
 public:
  constexpr Interval() = default;
  constexpr Interval(std::size_t first, std::size_t last) : first_(first), last_(last), empty_(first > last) {}

  static constexpr Interval empty() { return Interval(); }
  /// (0, n - 1); Empty when n == 0.
  static constexpr Interval full(std::size_t n) { return n == 0 ? Interval() : Interval(0, n - 1); }

  constexpr bool is_empty() const noexcept { return empty_; }
  constexpr std::size_t first() const noexcept { return first_; }
  constexpr std::size_t last() const noexcept { return last_; }
  constexpr std::size_t width() const noexcept { return empty_ ? 0 : last_ - first_ + 1; }

  constexpr bool operator==(const Interval& other) const noexcept {
    if (empty_ || other.empty_) return empty_ == other.empty_;
    return first_ == other.first_ && last_ == other.last_;
  }

 private:
  std::size_t first_ = 0;
  std::size_t last_ = 0;
  bool empty_ = true;
};

std::string to_string(const Interval& interval);

/// Shared interval update: with a run of `a` at rows [first, last] of a column
/// whose c-array entry for `a` is `c_a`, the extended match occupies
/// [c_a + occ(a, first), c_a + occ(a, last + 1) - 1]. Empty is absorbing.
Interval backward_step(const RankTable& ranks, std::size_t c_a, Interval interval, std::size_t a);

/// PBWT[i][j] = S_{pi_{j+1}(i)}[j], with per-column counts and rank tables.
class PbwtMatrix {
 public:
  PbwtMatrix(Alphabet alphabet, std::size_t n, std::vector<std::vector<Symbol>> columns, RankMode mode);
  PbwtMatrix(Alphabet alphabet, std::size_t n, std::vector<std::vector<Symbol>> columns,
             std::vector<RankTable> ranks);

  std::size_t n() const noexcept { return n_; }
  std::size_t len() const noexcept { return columns_.size(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  const std::vector<Symbol>& column(std::size_t j) const;
  std::string column_string(std::size_t j) const;
  const ColumnCounts& counts(std::size_t j) const;
  const RankTable& ranks(std::size_t j) const;

  Symbol at(std::size_t i, std::size_t j) const { return column(j)[i]; }

  /// Interval in pi_{j+1} order for pattern suffix Q -> interval in pi_j order for cQ.
  Interval backward_step(std::size_t j, Interval interval, char c) const;
  Interval backward_step_code(std::size_t j, Interval interval, Symbol a) const;

  /// Row `row` of pi_{j+1} order -> the same string's row in pi_j order.
  std::size_t step_row(std::size_t j, std::size_t row) const;

 private:
  void check_column(std::size_t j) const;

  Alphabet alphabet_;
  std::size_t n_;
  std::vector<std::vector<Symbol>> columns_;
  std::vector<ColumnCounts> counts_;
  std::vector<RankTable> ranks_;
};

PbwtMatrix build_pbwt(const StringCollection& collection, const PermutationTable& perms,
                      RankMode mode = RankMode::Exact);

/// Free-function form of PbwtMatrix::backward_step.
inline Interval backward_step(const PbwtMatrix& matrix, std::size_t j, Interval interval, char c) {
  return matrix.backward_step(j, interval, c);
}

}  // namespace pbwtidx
