#include <cmath>

#include "kernels_impl.hpp"

namespace srcid::simd {

namespace {

void complex_multiply_scalar(cplx* data, const cplx* mult, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = data[i].real(), ai = data[i].imag();
    const double br = mult[i].real(), bi = mult[i].imag();
    data[i] = cplx(ar * br - ai * bi, ar * bi + ai * br);
  }
}

void complex_scale_scalar(cplx* data, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) data[i] = cplx(data[i].real() * s, data[i].imag() * s);
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double sum_squares_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

double sum_squared_difference_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double weighted_sum_squares_scalar(const double* x, const double* w, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * x[i] * x[i];
  return s;
}

double weighted_power_scalar(const cplx* c, const double* w, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double re = c[i].real(), im = c[i].imag();
    s += w[i] * (re * re + im * im);
  }
  return s;
}

void max_abs_parts_scalar(const cplx* c, std::size_t n, double* max_re, double* max_im) {
  double r = 0.0, m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r = std::fmax(r, std::fabs(c[i].real()));
    m = std::fmax(m, std::fabs(c[i].imag()));
  }
  *max_re = r;
  *max_im = m;
}

constexpr KernelTable kScalar{
    "scalar",
    complex_multiply_scalar,
    complex_scale_scalar,
    axpy_scalar,
    sum_squares_scalar,
    sum_squared_difference_scalar,
    weighted_sum_squares_scalar,
    weighted_power_scalar,
    max_abs_parts_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace srcid::simd
