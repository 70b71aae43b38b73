// AArch64 only; NEON is part of the baseline ISA there, so no runtime probe.

#include <arm_neon.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace srcid::simd {

namespace {

inline float64x2_t cmul(float64x2_t a, float64x2_t b) {
  static const float64x2_t kSign = {-1.0, 1.0};
  const float64x2_t b_re = vdupq_laneq_f64(b, 0);
  const float64x2_t b_im = vdupq_laneq_f64(b, 1);
  const float64x2_t a_swap = vextq_f64(a, a, 1);
  const float64x2_t t = vmulq_f64(vmulq_f64(a_swap, b_im), kSign);
  return vfmaq_f64(t, a, b_re);
}

void complex_multiply_neon(cplx* data, const cplx* mult, std::size_t n) {
  auto* d = reinterpret_cast<double*>(data);
  const auto* m = reinterpret_cast<const double*>(mult);
  for (std::size_t i = 0; i < n; ++i) vst1q_f64(d + 2 * i, cmul(vld1q_f64(d + 2 * i), vld1q_f64(m + 2 * i)));
}

void complex_scale_neon(cplx* data, double s, std::size_t n) {
  auto* d = reinterpret_cast<double*>(data);
  for (std::size_t i = 0; i < n; ++i) vst1q_f64(d + 2 * i, vmulq_n_f64(vld1q_f64(d + 2 * i), s));
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_n_f64(vld1q_f64(y + i), vld1q_f64(x + i), a));
  for (; i < n; ++i) y[i] += a * x[i];
}

double sum_squares_neon(const double* x, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0), acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t v0 = vld1q_f64(x + i), v1 = vld1q_f64(x + i + 2);
    acc0 = vfmaq_f64(acc0, v0, v0);
    acc1 = vfmaq_f64(acc1, v1, v1);
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

double sum_squared_difference_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    acc = vfmaq_f64(acc, d, d);
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double weighted_sum_squares_neon(const double* x, const double* w, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(x + i);
    acc = vfmaq_f64(acc, vmulq_f64(v, v), vld1q_f64(w + i));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += w[i] * x[i] * x[i];
  return s;
}

double weighted_power_neon(const cplx* c, const double* w, std::size_t n) {
  const auto* d = reinterpret_cast<const double*>(c);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t v = vld1q_f64(d + 2 * i);
    acc = vfmaq_n_f64(acc, vmulq_f64(v, v), w[i]);
  }
  return vaddvq_f64(acc);
}

void max_abs_parts_neon(const cplx* c, std::size_t n, double* max_re, double* max_im) {
  const auto* d = reinterpret_cast<const double*>(c);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) acc = vmaxq_f64(acc, vabsq_f64(vld1q_f64(d + 2 * i)));
  *max_re = vgetq_lane_f64(acc, 0);
  *max_im = vgetq_lane_f64(acc, 1);
}

constexpr KernelTable kNeon{
    "neon",
    complex_multiply_neon,
    complex_scale_neon,
    axpy_neon,
    sum_squares_neon,
    sum_squared_difference_neon,
    weighted_sum_squares_neon,
    weighted_power_neon,
    max_abs_parts_neon,
};

}  // namespace

const KernelTable& detail::neon_table() noexcept { return kNeon; }

}  // namespace srcid::simd
