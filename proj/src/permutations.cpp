#include "pbwtidx/permutations.hpp"

#include <numeric>

#include "pbwtidx/error.hpp"
#include "pbwtidx/kernels.hpp"

namespace pbwtidx {

PermutationTable::PermutationTable(std::size_t n, std::vector<Permutation> columns)
    : n_(n), columns_(std::move(columns)) {
  if (columns_.empty()) throw Error(Errc::InvalidArgument, "permutation table needs at least one column");
  for (const auto& c : columns_) {
    if (c.size() != n_) throw Error(Errc::InvalidArgument, "permutation column has wrong length");
  }
}

const Permutation& PermutationTable::column(std::size_t j) const {
  if (j >= columns_.size()) {
    throw Error(Errc::IndexOutOfRange, "permutation column " + std::to_string(j) + " > len " + std::to_string(len()));
  }
  return columns_[j];
}

ColumnCounts count_symbols(std::span<const Symbol> symbols, std::size_t code_count) {
  ColumnCounts counts;
  counts.freq.resize(code_count);
  counts.c_array.resize(code_count);
  for (std::size_t a = 0; a < code_count; ++a) {
    counts.freq[a] = kernels::count_equal(symbols, static_cast<Symbol>(a));
  }
  std::size_t running = 0;
  for (std::size_t a = 0; a < code_count; ++a) {
    counts.c_array[a] = running;
    running += counts.freq[a];
  }
  return counts;
}

ColumnCounts column_counts(const StringCollection& collection, std::size_t j) {
  return count_symbols(collection.column(j), collection.alphabet().sigma());
}

Permutation radix_step(const StringCollection& collection, std::size_t j, std::span<const std::uint32_t> next) {
  const std::size_t n = collection.n();
  if (next.size() != n) throw Error(Errc::InvalidArgument, "permutation length differs from n");
  ColumnCounts counts = column_counts(collection, j);
  std::vector<std::size_t> seen(counts.c_array.size(), 0);
  Permutation out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t x = next[i];
    Symbol a = collection.code(x, j);
    out[counts.c_array[a] + seen[a]] = x;
    ++seen[a];
  }
  return out;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::uint32_t{0});
  return p;
}

PermutationTable build_permutations(const StringCollection& collection) {
  const std::size_t len = collection.len();
  std::vector<Permutation> columns(len + 1);
  columns[len] = identity_permutation(collection.n());
  for (std::size_t j = len; j-- > 0;) {
    columns[j] = radix_step(collection, j, columns[j + 1]);
  }
  return PermutationTable(collection.n(), std::move(columns));
}

}  // namespace pbwtidx
