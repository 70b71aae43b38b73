#pragma once

// Pointwise and reduction kernels for the spectral pipeline. Every kernel has
// a scalar reference implementation; vector variants (AVX2+FMA on x86-64,
// NEON on AArch64) are chosen once at runtime and must agree with the scalar
// path to within reduction-order rounding.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace srcid::simd {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;

  /// data[i] *= mult[i]
  void (*complex_multiply)(cplx* data, const cplx* mult, std::size_t n);
  /// data[i] *= s
  void (*complex_scale)(cplx* data, double s, std::size_t n);
  /// y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  /// sum x[i]^2
  double (*sum_squares)(const double* x, std::size_t n);
  /// sum (a[i] - b[i])^2
  double (*sum_squared_difference)(const double* a, const double* b, std::size_t n);
  /// sum w[i] * x[i]^2
  double (*weighted_sum_squares)(const double* x, const double* w, std::size_t n);
  /// sum w[i] * |c[i]|^2
  double (*weighted_power)(const cplx* c, const double* w, std::size_t n);
  /// max |Im c[i]| and max |Re c[i]|
  void (*max_abs_parts)(const cplx* c, std::size_t n, double* max_re, double* max_im);
};

const KernelTable& scalar_kernels() noexcept;
/// nullptr when the variant was not compiled in or the CPU lacks the feature.
const KernelTable* avx2_kernels() noexcept;
const KernelTable* neon_kernels() noexcept;

/// The table used by the library. Chosen on first use: the widest supported
/// variant, unless SRCID_KERNELS=scalar is set in the environment.
const KernelTable& active_kernels() noexcept;

// Span conveniences over the active table.

inline void complex_multiply(std::span<cplx> data, std::span<const cplx> mult) {
  active_kernels().complex_multiply(data.data(), mult.data(), data.size());
}
inline void complex_scale(std::span<cplx> data, double s) {
  active_kernels().complex_scale(data.data(), s, data.size());
}
inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active_kernels().axpy(a, x.data(), y.data(), y.size());
}
inline double sum_squares(std::span<const double> x) { return active_kernels().sum_squares(x.data(), x.size()); }
inline double sum_squared_difference(std::span<const double> a, std::span<const double> b) {
  return active_kernels().sum_squared_difference(a.data(), b.data(), a.size());
}
inline double weighted_sum_squares(std::span<const double> x, std::span<const double> w) {
  return active_kernels().weighted_sum_squares(x.data(), w.data(), x.size());
}
inline double weighted_power(std::span<const cplx> c, std::span<const double> w) {
  return active_kernels().weighted_power(c.data(), w.data(), c.size());
}

}  // namespace srcid::simd
