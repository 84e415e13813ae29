#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pbwtidx/collection.hpp"

namespace pbwtidx {

/// A permutation of string indexes {0..n-1}; entry i is the string whose
/// suffix is lexicographically i-th.
using Permutation = std::vector<std::uint32_t>;

/// Symbol frequencies of one column and their exclusive prefix sums.
struct ColumnCounts {
  std::vector<std::size_t> freq;
  std::vector<std::size_t> c_array;  // c_array[a] = number of characters < a

  bool operator==(const ColumnCounts&) const = default;
};

/// The sorted-suffix permutations pi_0..pi_len of a collection.
/// columns[len] is the identity; ties keep ascending string index.
class PermutationTable {
 public:
  PermutationTable(std::size_t n, std::vector<Permutation> columns);

  std::size_t n() const noexcept { return n_; }
  std::size_t len() const noexcept { return columns_.size() - 1; }

  /// pi_j for 0 <= j <= len.
  const Permutation& column(std::size_t j) const;
  const std::vector<Permutation>& columns() const noexcept { return columns_; }

 private:
  std::size_t n_;
  std::vector<Permutation> columns_;
};

/// Counts over an arbitrary symbol sequence with `code_count` distinct codes.
ColumnCounts count_symbols(std::span<const Symbol> symbols, std::size_t code_count);

/// Counts over {S_0[j], .., S_{n-1}[j]}.
ColumnCounts column_counts(const StringCollection& collection, std::size_t j);

/// One step of the right-to-left radix sort: pi_j from pi_{j+1}.
/// Stable counting sort of pi_{j+1} keyed on column j.
Permutation radix_step(const StringCollection& collection, std::size_t j, std::span<const std::uint32_t> next);

/// All columns, j = len down to 0. O(n * (len + sigma)).
PermutationTable build_permutations(const StringCollection& collection);

Permutation identity_permutation(std::size_t n);

}  // namespace pbwtidx
