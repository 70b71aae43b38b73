// Built with -mavx2 -mfma. Nothing here may run before the dispatcher has
// confirmed both features on the host CPU.

#include <immintrin.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace srcid::simd {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Two complex values per register, interleaved (re0, im0, re1, im1).
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swap, b_im));
}

void complex_multiply_avx2(cplx* data, const cplx* mult, std::size_t n) {
  auto* d = reinterpret_cast<double*>(data);
  const auto* m = reinterpret_cast<const double*>(mult);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a0 = _mm256_loadu_pd(d + 2 * i);
    const __m256d a1 = _mm256_loadu_pd(d + 2 * i + 4);
    const __m256d b0 = _mm256_loadu_pd(m + 2 * i);
    const __m256d b1 = _mm256_loadu_pd(m + 2 * i + 4);
    _mm256_storeu_pd(d + 2 * i, cmul(a0, b0));
    _mm256_storeu_pd(d + 2 * i + 4, cmul(a1, b1));
  }
  for (; i + 2 <= n; i += 2) {
    _mm256_storeu_pd(d + 2 * i, cmul(_mm256_loadu_pd(d + 2 * i), _mm256_loadu_pd(m + 2 * i)));
  }
  for (; i < n; ++i) {
    const double ar = data[i].real(), ai = data[i].imag();
    const double br = mult[i].real(), bi = mult[i].imag();
    data[i] = cplx(ar * br - ai * bi, ar * bi + ai * br);
  }
}

void complex_scale_avx2(cplx* data, double s, std::size_t n) {
  auto* d = reinterpret_cast<double*>(data);
  const std::size_t len = 2 * n;
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) _mm256_storeu_pd(d + i, _mm256_mul_pd(_mm256_loadu_pd(d + i), vs));
  for (; i < len; ++i) d[i] *= s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double sum_squares_avx2(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d v0 = _mm256_loadu_pd(x + i);
    const __m256d v1 = _mm256_loadu_pd(x + i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

double sum_squared_difference_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4));
    acc0 = _mm256_fmadd_pd(d0, d0, acc0);
    acc1 = _mm256_fmadd_pd(d1, d1, acc1);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double weighted_sum_squares_avx2(const double* x, const double* w, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(v, v), _mm256_loadu_pd(w + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += w[i] * x[i] * x[i];
  return s;
}

double weighted_power_avx2(const cplx* c, const double* w, std::size_t n) {
  const auto* d = reinterpret_cast<const double*>(c);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(d + 2 * i);
    // (w0, w0, w1, w1) lines up with (re0, im0, re1, im1).
    const __m128d w2 = _mm_loadu_pd(w + i);
    const __m256d ww = _mm256_permute4x64_pd(_mm256_castpd128_pd256(w2), 0x50);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(v, v), ww, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += w[i] * std::norm(c[i]);
  return s;
}

void max_abs_parts_avx2(const cplx* c, std::size_t n, double* max_re, double* max_im) {
  const auto* d = reinterpret_cast<const double*>(c);
  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign, _mm256_loadu_pd(d + 2 * i)));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double r = std::fmax(lanes[0], lanes[2]);
  double m = std::fmax(lanes[1], lanes[3]);
  for (; i < n; ++i) {
    r = std::fmax(r, std::fabs(c[i].real()));
    m = std::fmax(m, std::fabs(c[i].imag()));
  }
  *max_re = r;
  *max_im = m;
}

constexpr KernelTable kAvx2{
    "avx2",
    complex_multiply_avx2,
    complex_scale_avx2,
    axpy_avx2,
    sum_squares_avx2,
    sum_squared_difference_avx2,
    weighted_sum_squares_avx2,
    weighted_power_avx2,
    max_abs_parts_avx2,
};

}  // namespace

const KernelTable& detail::avx2_table() noexcept { return kAvx2; }

}  // namespace srcid::simd
