#include "srcid/noise.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "srcid/error.hpp"
#include "srcid/simd/kernels.hpp"

namespace srcid {

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

RealField add_noise(const RealField& y, const NoiseSpec& spec) {
  if (!(spec.epsilon >= 0.0) || !std::isfinite(spec.epsilon)) {
    throw Error(ErrorCode::InvalidSpec, "add_noise: epsilon must be finite and >= 0");
  }
  y.require_finite("add_noise");
  RealField out = y;
  if (spec.epsilon == 0.0) return out;
  GaussianStream stream(spec.seed);
  std::vector<double> eta(y.size());
  for (auto& e : eta) e = stream.next();
  simd::axpy(spec.epsilon, eta, out.values());
  return out;
}

double composite_simpson(std::span<const double> samples, double h) {
  if (samples.size() < 3 || (samples.size() - 1) % 2 != 0) {
    std::ostringstream msg;
    msg << "composite_simpson: " << (samples.empty() ? 0 : samples.size() - 1)
        << " intervals; an even count of at least 2 is required";
    throw Error(ErrorCode::OddIntervalCount, msg.str());
  }
  const std::size_t m = samples.size() - 1;
  double odd = 0.0, even = 0.0;
  for (std::size_t i = 1; i < m; ++i) (i % 2 ? odd : even) += samples[i];
  return h / 3.0 * (samples.front() + 4.0 * odd + 2.0 * even + samples.back());
}

std::vector<double> periodic_simpson_weights(const Grid& grid) {
  std::vector<std::vector<double>> axes(grid.dim());
  for (std::size_t k = 0; k < grid.dim(); ++k) {
    const std::size_t n = grid.spec().samples[k];
    if (n % 2 != 0) {
      std::ostringstream msg;
      msg << "noise level: axis " << k << " has " << n << " samples; Simpson needs an even count";
      throw Error(ErrorCode::OddIntervalCount, msg.str());
    }
    const double h = grid.spacing(k);
    axes[k].resize(n);
    for (std::size_t i = 0; i < n; ++i) axes[k][i] = h * (i % 2 ? 4.0 : 2.0) / 3.0;
  }
  std::vector<double> w{1.0};
  for (const auto& axis : axes) {
    std::vector<double> next(w.size() * axis.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = 0; j < axis.size(); ++j) next[i * axis.size() + j] = w[i] * axis[j];
    }
    w = std::move(next);
  }
  return w;
}

double estimate_noise_level(const RealField& y, const RealField& y_delta) {
  if (y.grid().spec() != y_delta.grid().spec()) {
    throw Error(ErrorCode::GridMismatch, "estimate_noise_level: fields live on different grids");
  }
  const auto w = periodic_simpson_weights(y.grid());
  std::vector<double> diff(y.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = y[i] - y_delta[i];
  return std::sqrt(simd::weighted_sum_squares(diff, w));
}

}  // namespace srcid
