#pragma once

#include "srcid/simd/kernels.hpp"

namespace srcid::simd::detail {

// Defined only in the translation unit built for the matching ISA; the
// dispatcher references them behind the same preprocessor guards.
const KernelTable& avx2_table() noexcept;
const KernelTable& neon_table() noexcept;

}  // namespace srcid::simd::detail
