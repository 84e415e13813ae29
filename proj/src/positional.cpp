#include "pbwtidx/positional.hpp"

#include <algorithm>
#include <bit>

#include "pbwtidx/error.hpp"

namespace pbwtidx {

StoragePolicy StoragePolicy::sampled(std::size_t stride) {
  if (stride == 0) throw Error(Errc::InvalidArgument, "column stride must be >= 1");
  return StoragePolicy(Kind::SampledColumns, stride);
}

StoragePolicy StoragePolicy::sampled_default(std::size_t n) {
  std::size_t lg = n <= 1 ? 0 : std::bit_width(n - 1);  // ceil(lg n)
  return sampled(std::max<std::size_t>(lg, 1));
}

bool StoragePolicy::retains(std::size_t j, std::size_t len) const noexcept {
  if (j == len) return true;
  if (j > len) return false;
  switch (kind_) {
    case Kind::Full: return true;
    case Kind::SampledColumns: return j % stride_ == 0;
    case Kind::NoPerms: return false;
  }
  return false;
}

std::string StoragePolicy::describe() const {
  switch (kind_) {
    case Kind::Full: return "full";
    case Kind::SampledColumns: return "sampled(" + std::to_string(stride_) + ")";
    case Kind::NoPerms: return "none";
  }
  return "unknown";
}

PositionalIndex::PositionalIndex(StringCollection collection, PbwtMatrix matrix, StoragePolicy policy,
                                 std::map<std::size_t, Permutation> stored)
    : collection_(std::move(collection)), matrix_(std::move(matrix)), policy_(policy), stored_(std::move(stored)) {
  if (matrix_.n() != collection_.n() || matrix_.len() != collection_.len()) {
    throw Error(Errc::CorruptIndex, "PBWT dimensions differ from the collection");
  }
  for (std::size_t j = 0; j <= len(); ++j) {
    if (policy_.retains(j, len()) != stored_.contains(j)) {
      throw Error(Errc::CorruptIndex, "stored column " + std::to_string(j) + " disagrees with policy " +
                                          policy_.describe());
    }
  }
  for (const auto& [j, perm] : stored_) {
    if (j > len() || perm.size() != n()) throw Error(Errc::CorruptIndex, "stored permutation has wrong shape");
    std::vector<bool> seen(n(), false);
    for (auto x : perm) {
      if (x >= n() || seen[x]) throw Error(Errc::CorruptIndex, "stored column is not a permutation");
      seen[x] = true;
    }
  }
}

const Permutation& PositionalIndex::permutation(std::size_t j) const {
  auto it = stored_.find(j);
  if (it == stored_.end()) {
    throw Error(Errc::PermutationNotStored,
                "pi_" + std::to_string(j) + " is not stored under policy " + policy_.describe());
  }
  return it->second;
}

std::vector<Symbol> PositionalIndex::validate_query(std::string_view pattern, std::size_t k) const {
  if (k > len() || pattern.size() > len() - k) {
    throw Error(Errc::PatternOverrun, "position " + std::to_string(k) + " + pattern length " +
                                          std::to_string(pattern.size()) + " > len " + std::to_string(len()));
  }
  return collection_.alphabet().encode(pattern);
}

Interval PositionalIndex::binary_search(std::span<const std::uint32_t> perm, std::span<const Symbol> pattern,
                                        std::size_t k) const {
  // -1, 0, +1: S_x[k..k+m-1] against the pattern
  auto compare = [&](std::uint32_t x) {
    for (std::size_t t = 0; t < pattern.size(); ++t) {
      Symbol s = collection_.code(x, k + t);
      if (s != pattern[t]) return s < pattern[t] ? -1 : 1;
    }
    return 0;
  };
  auto lo = std::partition_point(perm.begin(), perm.end(), [&](std::uint32_t x) { return compare(x) < 0; });
  auto hi = std::partition_point(lo, perm.end(), [&](std::uint32_t x) { return compare(x) == 0; });
  if (lo == hi) return Interval::empty();
  return Interval(static_cast<std::size_t>(lo - perm.begin()), static_cast<std::size_t>(hi - perm.begin()) - 1);
}

Interval PositionalIndex::search_binary(std::string_view pattern, std::size_t k) const {
  auto codes = validate_query(pattern, k);
  return binary_search(permutation(k), codes, k);
}

Interval PositionalIndex::walk_back(std::span<const Symbol> pattern, std::size_t k, std::size_t from, Interval start,
                                    std::vector<TraceStep>* trace) const {
  Interval interval = start;
  if (trace) trace->push_back({from, interval});
  for (std::size_t j = from; j-- > k;) {
    interval = matrix_.backward_step_code(j, interval, pattern[j - k]);
    if (trace) trace->push_back({j, interval});
  }
  return interval;
}

Interval PositionalIndex::search_backward(std::string_view pattern, std::size_t k,
                                          std::vector<TraceStep>* trace) const {
  auto codes = validate_query(pattern, k);
  return walk_back(codes, k, k + codes.size(), Interval::full(n()), trace);
}

std::size_t PositionalIndex::nearest_stored_at_or_above(std::size_t k) const {
  // pi_len is always stored
  return stored_.lower_bound(k)->first;
}

Interval PositionalIndex::search_seeded(std::string_view pattern, std::size_t k,
                                        std::vector<TraceStep>* trace) const {
  auto codes = validate_query(pattern, k);
  const std::size_t end = k + codes.size();
  const std::size_t j = nearest_stored_at_or_above(k);
  if (j >= end) return walk_back(codes, k, end, Interval::full(n()), trace);
  std::span<const Symbol> tail(codes.data() + (j - k), codes.size() - (j - k));
  Interval seed = binary_search(stored_.at(j), tail, j);
  return walk_back(codes, k, j, seed, trace);
}

Permutation PositionalIndex::rebuild_permutation(std::size_t k) const {
  if (k > len()) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(k) + " > len " + std::to_string(len()));
  std::size_t j = nearest_stored_at_or_above(k);
  Permutation current = stored_.at(j);
  while (j > k) {
    --j;
    current = radix_step(collection_, j, current);
  }
  return current;
}

Interval PositionalIndex::search_rebuild(std::string_view pattern, std::size_t k, Permutation* rebuilt) const {
  auto codes = validate_query(pattern, k);
  Permutation perm = rebuild_permutation(k);
  Interval result = binary_search(perm, codes, k);
  if (rebuilt) *rebuilt = std::move(perm);
  return result;
}

std::vector<std::uint32_t> PositionalIndex::locate(Interval interval, std::size_t k) const {
  if (interval.is_empty()) return {};
  if (k > len()) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(k) + " > len " + std::to_string(len()));
  if (interval.last() >= n()) throw Error(Errc::IndexOutOfRange, "interval " + to_string(interval) + " exceeds n");
  auto it = stored_.upper_bound(k);
  if (it == stored_.begin()) {
    throw Error(Errc::NoStoredColumnAtOrBelow,
                "no stored permutation at or below column " + std::to_string(k) + " under policy " +
                    policy_.describe());
  }
  --it;
  const std::size_t h = it->first;
  const Permutation& perm = it->second;
  std::vector<std::uint32_t> out;
  out.reserve(interval.width());
  for (std::size_t i = interval.first(); i <= interval.last(); ++i) {
    std::size_t row = i;
    for (std::size_t col = k; col > h; --col) row = matrix_.step_row(col - 1, row);
    out.push_back(perm[row]);
  }
  return out;
}

PositionalHits PositionalIndex::find(std::string_view pattern, std::size_t k, Strategy strategy,
                                     std::vector<TraceStep>* trace) const {
  PositionalHits hits;
  auto report = [&](const Permutation& perm) {
    for (std::size_t i = hits.interval.first(); !hits.interval.is_empty() && i <= hits.interval.last(); ++i) {
      hits.strings.push_back(perm[i]);
    }
  };
  switch (strategy) {
    case Strategy::Binary:
      if (has_permutation(k)) {
        hits.interval = search_binary(pattern, k);
        if (trace) trace->push_back({k, hits.interval});
        report(permutation(k));
        return hits;
      }
      hits.interval = search_seeded(pattern, k, trace);
      break;
    case Strategy::Backward:
      hits.interval = search_backward(pattern, k, trace);
      break;
    case Strategy::Rebuild: {
      Permutation perm;
      hits.interval = search_rebuild(pattern, k, &perm);
      if (trace) trace->push_back({k, hits.interval});
      report(perm);
      return hits;
    }
  }
  if (hits.interval.is_empty()) return hits;
  if (stored_.begin()->first <= k) {
    hits.strings = locate(hits.interval, k);
  } else {
    report(rebuild_permutation(k));
  }
  return hits;
}

PositionalIndex build_index(const StringCollection& collection, StoragePolicy policy, RankMode mode) {
  PermutationTable perms = build_permutations(collection);
  PbwtMatrix matrix = build_pbwt(collection, perms, mode);
  std::map<std::size_t, Permutation> stored;
  for (std::size_t j = 0; j <= collection.len(); ++j) {
    if (policy.retains(j, collection.len())) stored.emplace(j, perms.column(j));
  }
  return PositionalIndex(collection, std::move(matrix), policy, std::move(stored));
}

}  // namespace pbwtidx
