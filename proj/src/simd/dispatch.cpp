#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace srcid::simd {

const KernelTable* avx2_kernels() noexcept {
#if defined(SRCID_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() noexcept {
#if defined(SRCID_HAVE_NEON)
  return &detail::neon_table();
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() noexcept {
  static const KernelTable& table = []() -> const KernelTable& {
    if (const char* forced = std::getenv("SRCID_KERNELS"); forced && std::string_view(forced) == "scalar") {
      return scalar_kernels();
    }
    if (const auto* t = avx2_kernels()) return *t;
    if (const auto* t = neon_kernels()) return *t;
    return scalar_kernels();
  }();
  return table;
}

}  // namespace srcid::simd
