#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbwtidx/collection.hpp"
#include "pbwtidx/pbwt.hpp"
#include "pbwtidx/permutations.hpp"

namespace pbwtidx {

/// Which permutation columns survive index construction.
class StoragePolicy {
 public:
  enum class Kind : std::uint8_t { Full = 0, SampledColumns = 1, NoPerms = 2 };

  static StoragePolicy full() { return StoragePolicy(Kind::Full, 1); }
  static StoragePolicy sampled(std::size_t stride);
  static StoragePolicy none() { return StoragePolicy(Kind::NoPerms, 1); }
  /// SampledColumns with stride ceil(lg n), at least 1.
  static StoragePolicy sampled_default(std::size_t n);

  Kind kind() const noexcept { return kind_; }
  std::size_t stride() const noexcept { return stride_; }

  /// Whether column j of a table with `len` columns plus pi_len is retained.
  bool retains(std::size_t j, std::size_t len) const noexcept;

  std::string describe() const;
  bool operator==(const StoragePolicy&) const = default;

 private:
  StoragePolicy(Kind kind, std::size_t stride) : kind_(kind), stride_(stride) {}

  Kind kind_;
  std::size_t stride_;
};

enum class Strategy { Binary, Backward, Rebuild };

/// Interval reached at column `column` while extending the pattern leftwards.
struct TraceStep {
  std::size_t column;
  Interval interval;

  bool operator==(const TraceStep&) const = default;
};

/// A query answer: the interval at column k and the string indexes in row order.
struct PositionalHits {
  Interval interval;
  std::vector<std::uint32_t> strings;
};

class PositionalIndex {
 public:
  /// Assembles an index from already-built parts (used by deserialization).
  /// Throws CorruptIndex if `stored` disagrees with `policy`.
  PositionalIndex(StringCollection collection, PbwtMatrix matrix, StoragePolicy policy,
                  std::map<std::size_t, Permutation> stored);

  const StringCollection& collection() const noexcept { return collection_; }
  const PbwtMatrix& matrix() const noexcept { return matrix_; }
  const StoragePolicy& policy() const noexcept { return policy_; }
  const std::map<std::size_t, Permutation>& stored_perms() const noexcept { return stored_; }
  std::size_t n() const noexcept { return collection_.n(); }
  std::size_t len() const noexcept { return collection_.len(); }

  bool has_permutation(std::size_t j) const noexcept { return stored_.contains(j); }
  /// Throws PermutationNotStored.
  const Permutation& permutation(std::size_t j) const;

  /// Two binary searches over the suffixes at k ordered by the stored pi_k.
  Interval search_binary(std::string_view pattern, std::size_t k) const;

  /// Starts at column k + m with (0, n - 1) and applies one backward step per
  /// pattern character, right to left. Works under any policy. When `trace`
  /// is given it receives one entry per column from k + m down to k.
  Interval search_backward(std::string_view pattern, std::size_t k, std::vector<TraceStep>* trace = nullptr) const;

  /// Binary search at the nearest stored column j >= k for the pattern suffix
  /// that starts there, then backward steps from j down to k.
  Interval search_seeded(std::string_view pattern, std::size_t k, std::vector<TraceStep>* trace = nullptr) const;

  /// Rebuilds pi_k from the nearest stored column at or above k, then binary
  /// searches. `rebuilt` receives pi_k when given.
  Interval search_rebuild(std::string_view pattern, std::size_t k, Permutation* rebuilt = nullptr) const;

  /// Walks each row of `interval` (column k) backwards to the greatest stored
  /// column h <= k and reports pi_h of the row reached. Output follows row order.
  std::vector<std::uint32_t> locate(Interval interval, std::size_t k) const;

  /// pi_k, from storage or rebuilt from the nearest stored column above.
  Permutation rebuild_permutation(std::size_t k) const;

  /// Search with `strategy` and report matching strings in row order.
  /// Binary falls back to search_seeded when pi_k is not stored; locating
  /// falls back to a rebuilt pi_k when no column h <= k is stored.
  PositionalHits find(std::string_view pattern, std::size_t k, Strategy strategy,
                      std::vector<TraceStep>* trace = nullptr) const;

 private:
  std::vector<Symbol> validate_query(std::string_view pattern, std::size_t k) const;
  Interval binary_search(std::span<const std::uint32_t> perm, std::span<const Symbol> pattern,
                         std::size_t k) const;
  std::size_t nearest_stored_at_or_above(std::size_t k) const;
  Interval walk_back(std::span<const Symbol> pattern, std::size_t k, std::size_t from, Interval start,
                     std::vector<TraceStep>* trace) const;

  StringCollection collection_;
  PbwtMatrix matrix_;
  StoragePolicy policy_;
  std::map<std::size_t, Permutation> stored_;
};

PositionalIndex build_index(const StringCollection& collection, StoragePolicy policy,
                            RankMode mode = RankMode::Exact);

}  // namespace pbwtidx
