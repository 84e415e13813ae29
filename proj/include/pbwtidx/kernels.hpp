#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Byte-counting kernels behind the per-column counts and the block-sampled
// rank queries. The scalar variant is the reference; vector variants must
// agree with it exactly.

namespace pbwtidx::kernels {

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend backend) noexcept;

/// Compiled in and supported by the running CPU.
bool backend_available(Backend backend) noexcept;

/// Best available backend, unless overridden by PBWT_IDX_KERNEL=scalar|avx2|neon
/// or set_backend().
Backend active_backend() noexcept;

/// Throws InvalidArgument if `backend` is not available.
void set_backend(Backend backend);

/// Number of bytes equal to `value`.
std::size_t count_equal(std::span<const std::uint8_t> bytes, std::uint8_t value) noexcept;

/// Number of bytes strictly less than `value` (unsigned comparison).
std::size_t count_less(std::span<const std::uint8_t> bytes, std::uint8_t value) noexcept;

/// Direct entry points per backend, for equivalence tests and benchmarks.
/// Calling an unavailable backend is undefined.
std::size_t count_equal_with(Backend backend, std::span<const std::uint8_t> bytes, std::uint8_t value) noexcept;
std::size_t count_less_with(Backend backend, std::span<const std::uint8_t> bytes, std::uint8_t value) noexcept;

}  // namespace pbwtidx::kernels
