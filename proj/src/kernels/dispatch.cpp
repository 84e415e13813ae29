#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"
#include "pbwtidx/error.hpp"
#include "pbwtidx/kernels.hpp"

namespace pbwtidx::kernels {

namespace {

Backend best_available() noexcept {
  if (backend_available(Backend::Avx2)) return Backend::Avx2;
  if (backend_available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

Backend initial_backend() noexcept {
  if (const char* env = std::getenv("PBWT_IDX_KERNEL")) {
    std::string name(env);
    for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
      if (name == backend_name(b) && backend_available(b)) return b;
    }
  }
  return best_available();
}

std::atomic<Backend>& current() noexcept {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool backend_available(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(PBWTIDX_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(PBWTIDX_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend backend) {
  if (!backend_available(backend)) {
    throw Error(Errc::InvalidArgument, "kernel backend " + std::string(backend_name(backend)) + " is not available");
  }
  current().store(backend, std::memory_order_relaxed);
}

std::size_t count_equal_with(Backend backend, std::span<const std::uint8_t> bytes, std::uint8_t value) noexcept {
  switch (backend) {
#if defined(PBWTIDX_HAVE_AVX2)
    case Backend::Avx2: return avx2::count_equal(bytes.data(), bytes.size(), value);
#endif
#if defined(PBWTIDX_HAVE_NEON)
    case Backend::Neon: return neon::count_equal(bytes.data(), bytes.size(), value);
#endif
    default: return scalar::count_equal(bytes.data(), bytes.size(), value);
  }
}

std::size_t count_less_with(Backend backend, std::span<const std::uint8_t> bytes, std::uint8_t value) noexcept {
  switch (backend) {
#if defined(PBWTIDX_HAVE_AVX2)
    case Backend::Avx2: return avx2::count_less(bytes.data(), bytes.size(), value);
#endif
#if defined(PBWTIDX_HAVE_NEON)
    case Backend::Neon: return neon::count_less(bytes.data(), bytes.size(), value);
#endif
    default: return scalar::count_less(bytes.data(), bytes.size(), value);
  }
}

std::size_t count_equal(std::span<const std::uint8_t> bytes, std::uint8_t value) noexcept {
  return count_equal_with(active_backend(), bytes, value);
}

std::size_t count_less(std::span<const std::uint8_t> bytes, std::uint8_t value) noexcept {
  return count_less_with(active_backend(), bytes, value);
}

}  // namespace pbwtidx::kernels
