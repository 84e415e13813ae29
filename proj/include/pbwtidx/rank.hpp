#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pbwtidx/alphabet.hpp"

namespace pbwtidx {

enum class RankMode : std::uint8_t {
  Exact = 0,    // full prefix-count table, O(1) queries, code_count * (n + 1) counters
  Sampled = 1,  // counts every kSampleBlock positions, vector scan inside the block
};

/// occ(a, i): occurrences of code `a` among the first i symbols of one column.
class RankTable {
 public:
  static constexpr std::size_t kSampleBlock = 64;

  RankTable() = default;
  RankTable(std::span<const Symbol> symbols, std::size_t code_count, RankMode mode = RankMode::Exact);

  /// Rebuilds a table from its serialized counters. Throws CorruptIndex if
  /// `counters` does not match what `symbols` would produce in size.
  static RankTable from_parts(std::span<const Symbol> symbols, std::size_t code_count, RankMode mode,
                              std::vector<std::uint32_t> counters);

  std::size_t rank(std::size_t a, std::size_t i) const;

  std::size_t size() const noexcept { return size_; }
  std::size_t code_count() const noexcept { return code_count_; }
  RankMode mode() const noexcept { return mode_; }
  const std::vector<std::uint32_t>& counters() const noexcept { return counters_; }

 private:
  static std::size_t counter_count(std::size_t size, std::size_t code_count, RankMode mode) noexcept;

  std::size_t size_ = 0;
  std::size_t code_count_ = 0;
  RankMode mode_ = RankMode::Exact;
  // Exact: counters_[a * (size_ + 1) + i]. Sampled: counters_[b * code_count_ + a]
  // holds occ(a, b * kSampleBlock).
  std::vector<std::uint32_t> counters_;
  std::vector<Symbol> symbols_;  // Sampled only
};

/// occ(a, i) on `table`; the free-function form of RankTable::rank.
inline std::size_t rank_query(const RankTable& table, std::size_t a, std::size_t i) { return table.rank(a, i); }

}  // namespace pbwtidx
