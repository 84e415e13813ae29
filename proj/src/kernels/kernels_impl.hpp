#pragma once

#include <cstddef>
#include <cstdint>

namespace pbwtidx::kernels {

namespace scalar {
std::size_t count_equal(const std::uint8_t* p, std::size_t n, std::uint8_t value) noexcept;
std::size_t count_less(const std::uint8_t* p, std::size_t n, std::uint8_t value) noexcept;
}  // namespace scalar

#if defined(PBWTIDX_HAVE_AVX2)
namespace avx2 {
std::size_t count_equal(const std::uint8_t* p, std::size_t n, std::uint8_t value) noexcept;
std::size_t count_less(const std::uint8_t* p, std::size_t n, std::uint8_t value) noexcept;
}  // namespace avx2
#endif

#if defined(PBWTIDX_HAVE_NEON)
namespace neon {
std::size_t count_equal(const std::uint8_t* p, std::size_t n, std::uint8_t value) noexcept;
std::size_t count_less(const std::uint8_t* p, std::size_t n, std::uint8_t value) noexcept;
}  // namespace neon
#endif

}  // namespace pbwtidx::kernels
