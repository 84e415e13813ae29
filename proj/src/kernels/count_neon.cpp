#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace pbwtidx::kernels::neon {

namespace {

// Matching lanes are 0xff; subtracting accumulates +1 per lane. A u8 lane
// overflows after 255 blocks, so widen every 255 iterations.
template <typename Match>
std::size_t count_blocks(const std::uint8_t* p, std::size_t n, Match match, std::size_t& consumed) noexcept {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i + 16 <= n) {
    uint8x16_t acc = vdupq_n_u8(0);
    for (int round = 0; round < 255 && i + 16 <= n; ++round, i += 16) {
      acc = vsubq_u8(acc, match(vld1q_u8(p + i)));
    }
    count += vaddlvq_u8(acc);
  }
  consumed = i;
  return count;
}

}  // namespace

std::size_t count_equal(const std::uint8_t* p, std::size_t n, std::uint8_t value) noexcept {
  const uint8x16_t needle = vdupq_n_u8(value);
  std::size_t i = 0;
  std::size_t count = count_blocks(p, n, [&](uint8x16_t v) { return vceqq_u8(v, needle); }, i);
  return count + scalar::count_equal(p + i, n - i, value);
}

std::size_t count_less(const std::uint8_t* p, std::size_t n, std::uint8_t value) noexcept {
  const uint8x16_t bound = vdupq_n_u8(value);
  std::size_t i = 0;
  std::size_t count = count_blocks(p, n, [&](uint8x16_t v) { return vcltq_u8(v, bound); }, i);
  return count + scalar::count_less(p + i, n - i, value);
}

}  // namespace pbwtidx::kernels::neon
