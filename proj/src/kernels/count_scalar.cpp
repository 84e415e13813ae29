#include "kernels_impl.hpp"

namespace pbwtidx::kernels::scalar {

std::size_t count_equal(const std::uint8_t* p, std::size_t n, std::uint8_t value) noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += (p[i] == value);
  return count;
}

std::size_t count_less(const std::uint8_t* p, std::size_t n, std::uint8_t value) noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += (p[i] < value);
  return count;
}

}  // namespace pbwtidx::kernels::scalar
