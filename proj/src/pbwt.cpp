#include "pbwtidx/pbwt.hpp"

#include "pbwtidx/error.hpp"

namespace pbwtidx {

std::string to_string(const Interval& interval) {
  if (interval.is_empty()) return "empty";
  return std::to_string(interval.first()) + " " + std::to_string(interval.last());
}

Interval backward_step(const RankTable& ranks, std::size_t c_a, Interval interval, std::size_t a) {
  if (interval.is_empty()) return Interval::empty();
  if (interval.last() >= ranks.size()) {
    throw Error(Errc::IndexOutOfRange, "interval " + to_string(interval) + " exceeds column of size " +
                                           std::to_string(ranks.size()));
  }
  std::size_t lo = ranks.rank(a, interval.first());
  std::size_t hi = ranks.rank(a, interval.last() + 1);
  if (hi == lo) return Interval::empty();
  return Interval(c_a + lo, c_a + hi - 1);
}

PbwtMatrix::PbwtMatrix(Alphabet alphabet, std::size_t n, std::vector<std::vector<Symbol>> columns, RankMode mode)
    : alphabet_(std::move(alphabet)), n_(n), columns_(std::move(columns)) {
  counts_.reserve(columns_.size());
  ranks_.reserve(columns_.size());
  for (const auto& col : columns_) {
    if (col.size() != n_) throw Error(Errc::InvalidArgument, "PBWT column has wrong length");
    counts_.push_back(count_symbols(col, alphabet_.sigma()));
    ranks_.emplace_back(col, alphabet_.sigma(), mode);
  }
}

PbwtMatrix::PbwtMatrix(Alphabet alphabet, std::size_t n, std::vector<std::vector<Symbol>> columns,
                       std::vector<RankTable> ranks)
    : alphabet_(std::move(alphabet)), n_(n), columns_(std::move(columns)), ranks_(std::move(ranks)) {
  if (ranks_.size() != columns_.size()) throw Error(Errc::CorruptIndex, "rank table count mismatch");
  counts_.reserve(columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (columns_[j].size() != n_ || ranks_[j].size() != n_ || ranks_[j].code_count() != alphabet_.sigma()) {
      throw Error(Errc::CorruptIndex, "PBWT column " + std::to_string(j) + " has inconsistent size");
    }
    counts_.push_back(count_symbols(columns_[j], alphabet_.sigma()));
  }
}

void PbwtMatrix::check_column(std::size_t j) const {
  if (j >= columns_.size()) {
    throw Error(Errc::IndexOutOfRange, "PBWT column " + std::to_string(j) + " >= len " + std::to_string(len()));
  }
}

const std::vector<Symbol>& PbwtMatrix::column(std::size_t j) const {
  check_column(j);
  return columns_[j];
}

std::string PbwtMatrix::column_string(std::size_t j) const { return alphabet_.decode(column(j)); }

const ColumnCounts& PbwtMatrix::counts(std::size_t j) const {
  check_column(j);
  return counts_[j];
}

const RankTable& PbwtMatrix::ranks(std::size_t j) const {
  check_column(j);
  return ranks_[j];
}

Interval PbwtMatrix::backward_step(std::size_t j, Interval interval, char c) const {
  return backward_step_code(j, interval, alphabet_.rank(c));
}

Interval PbwtMatrix::backward_step_code(std::size_t j, Interval interval, Symbol a) const {
  check_column(j);
  return pbwtidx::backward_step(ranks_[j], counts_[j].c_array.at(a), interval, a);
}

std::size_t PbwtMatrix::step_row(std::size_t j, std::size_t row) const {
  check_column(j);
  if (row >= n_) throw Error(Errc::IndexOutOfRange, "row " + std::to_string(row) + " >= n " + std::to_string(n_));
  Symbol a = columns_[j][row];
  return counts_[j].c_array[a] + ranks_[j].rank(a, row);
}

PbwtMatrix build_pbwt(const StringCollection& collection, const PermutationTable& perms, RankMode mode) {
  if (perms.n() != collection.n() || perms.len() != collection.len()) {
    throw Error(Errc::InvalidArgument, "permutation table does not match collection dimensions");
  }
  const std::size_t n = collection.n();
  std::vector<std::vector<Symbol>> columns(collection.len(), std::vector<Symbol>(n));
  for (std::size_t j = 0; j < collection.len(); ++j) {
    const Permutation& next = perms.column(j + 1);
    for (std::size_t i = 0; i < n; ++i) columns[j][i] = collection.code(next[i], j);
  }
  return PbwtMatrix(collection.alphabet(), n, std::move(columns), mode);
}

}  // namespace pbwtidx
