#include "pbwtidx/rank.hpp"

#include <string>

#include "pbwtidx/error.hpp"
#include "pbwtidx/kernels.hpp"

namespace pbwtidx {

std::size_t RankTable::counter_count(std::size_t size, std::size_t code_count, RankMode mode) noexcept {
  if (mode == RankMode::Exact) return code_count * (size + 1);
  return code_count * (size / kSampleBlock + 1);
}

RankTable::RankTable(std::span<const Symbol> symbols, std::size_t code_count, RankMode mode)
    : size_(symbols.size()), code_count_(code_count), mode_(mode) {
  counters_.assign(counter_count(size_, code_count_, mode_), 0);
  for (Symbol s : symbols) {
    if (s >= code_count_) throw Error(Errc::InvalidArgument, "symbol code exceeds code count");
  }
  if (mode_ == RankMode::Exact) {
    const std::size_t stride = size_ + 1;
    for (std::size_t a = 0; a < code_count_; ++a) {
      std::uint32_t* row = counters_.data() + a * stride;
      for (std::size_t i = 0; i < size_; ++i) row[i + 1] = row[i] + (symbols[i] == a);
    }
  } else {
    symbols_.assign(symbols.begin(), symbols.end());
    const std::size_t blocks = size_ / kSampleBlock;
    for (std::size_t b = 0; b < blocks; ++b) {
      auto block = symbols.subspan(b * kSampleBlock, kSampleBlock);
      for (std::size_t a = 0; a < code_count_; ++a) {
        counters_[(b + 1) * code_count_ + a] =
            counters_[b * code_count_ + a] + static_cast<std::uint32_t>(kernels::count_equal(block, static_cast<Symbol>(a)));
      }
    }
  }
}

RankTable RankTable::from_parts(std::span<const Symbol> symbols, std::size_t code_count, RankMode mode,
                                std::vector<std::uint32_t> counters) {
  if (mode != RankMode::Exact && mode != RankMode::Sampled) throw Error(Errc::CorruptIndex, "unknown rank mode");
  if (counters.size() != counter_count(symbols.size(), code_count, mode)) {
    throw Error(Errc::CorruptIndex, "rank table size mismatch");
  }
  RankTable t;
  t.size_ = symbols.size();
  t.code_count_ = code_count;
  t.mode_ = mode;
  t.counters_ = std::move(counters);
  if (mode == RankMode::Sampled) t.symbols_.assign(symbols.begin(), symbols.end());
  for (Symbol s : symbols) {
    if (s >= code_count) throw Error(Errc::CorruptIndex, "symbol code exceeds code count");
  }
  return t;
}

std::size_t RankTable::rank(std::size_t a, std::size_t i) const {
  if (i > size_) {
    throw Error(Errc::IndexOutOfRange, "rank prefix " + std::to_string(i) + " > size " + std::to_string(size_));
  }
  if (a >= code_count_) {
    throw Error(Errc::RankOutOfRange, "symbol " + std::to_string(a) + " >= " + std::to_string(code_count_));
  }
  if (mode_ == RankMode::Exact) return counters_[a * (size_ + 1) + i];
  const std::size_t b = i / kSampleBlock;
  const std::size_t base = b * kSampleBlock;
  return counters_[b * code_count_ + a] +
         kernels::count_equal(std::span<const Symbol>(symbols_).subspan(base, i - base), static_cast<Symbol>(a));
}

}  // namespace pbwtidx
