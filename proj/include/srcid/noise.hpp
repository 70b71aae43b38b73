#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "srcid/spectral.hpp"

namespace srcid {

/// Additive i.i.d. Normal(0, epsilon^2) perturbation of every sample.
struct NoiseSpec {
  double epsilon = 0.0;
  std::uint64_t seed = 0;
};

/// Standard normal draws, reproducible bit-for-bit per seed on any
/// conforming platform.
///
/// The stream is std::mt19937_64 (its output sequence is fixed by the C++
/// standard). Each 64-bit word becomes a uniform double (w >> 11) * 2^-53 in
/// [0, 1). Pairs (u1, u2) feed the basic Box-Muller transform
///   r = sqrt(-2 ln(1 - u1)),  z0 = r cos(2 pi u2),  z1 = r sin(2 pi u2)
/// and z0 is returned before z1. std::normal_distribution is avoided because
/// its algorithm differs between standard libraries.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// y_delta(x_i) = y(x_i) + epsilon * eta_i, eta drawn in row-major node order.
RealField add_noise(const RealField& y, const NoiseSpec& spec);

/// Composite Simpson rule over equally spaced samples f_0..f_m (m intervals of
/// width h). Exact for cubics. Throws Error(OddIntervalCount) when m is odd.
double composite_simpson(std::span<const double> samples, double h);

/// Noise level delta = sqrt(\int |y - y_delta|^2) over the box.
///
/// The samples are cell-centred and the transform treats the box as periodic,
/// so along each axis the sequence is closed periodically (node N == node 0)
/// and composite Simpson runs over the resulting N intervals. N_k must be
/// even on every axis (Error(OddIntervalCount) otherwise).
double estimate_noise_level(const RealField& y, const RealField& y_delta);

/// Simpson weights of estimate_noise_level, one per node.
std::vector<double> periodic_simpson_weights(const Grid& grid);

}  // namespace srcid
