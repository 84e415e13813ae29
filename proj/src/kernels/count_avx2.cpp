// Compiled with -mavx2; only reached when the CPU reports AVX2.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace pbwtidx::kernels::avx2 {

namespace {

// Popcount of the match mask over 32-byte blocks, scalar tail.
template <typename Match, typename Tail>
std::size_t count_blocks(const std::uint8_t* p, std::size_t n, Match match, Tail tail) noexcept {
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(match(v)));
    count += static_cast<std::size_t>(_mm_popcnt_u32(mask));
  }
  return count + tail(p + i, n - i);
}

}  // namespace

std::size_t count_equal(const std::uint8_t* p, std::size_t n, std::uint8_t value) noexcept {
  const __m256i needle = _mm256_set1_epi8(static_cast<char>(value));
  return count_blocks(
      p, n, [&](__m256i v) { return _mm256_cmpeq_epi8(v, needle); },
      [&](const std::uint8_t* q, std::size_t m) { return scalar::count_equal(q, m, value); });
}

std::size_t count_less(const std::uint8_t* p, std::size_t n, std::uint8_t value) noexcept {
  if (value == 0) return 0;
  // x < value  <=>  x <= value - 1  <=>  min(x, value - 1) == x
  const __m256i bound = _mm256_set1_epi8(static_cast<char>(value - 1));
  return count_blocks(
      p, n, [&](__m256i v) { return _mm256_cmpeq_epi8(_mm256_min_epu8(v, bound), v); },
      [&](const std::uint8_t* q, std::size_t m) { return scalar::count_less(q, m, value); });
}

}  // namespace pbwtidx::kernels::avx2
