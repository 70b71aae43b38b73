#pragma once

#include <complex>
#include <span>
#include <vector>

#include "srcid/grid.hpp"
#include "srcid/spectral.hpp"

namespace srcid {

/// Coefficients of u_t = alpha2 Lap u - beta . grad u - nu u + f, u(.,0) = 0,
/// observed at t0.
struct ModelParams {
  double alpha2 = 1.0;
  std::vector<double> beta;
  double nu = 1.0;
  double t0 = 1.0;

  /// Throws Error(InvalidSpec) for nonpositive coefficients and
  /// Error(DimensionMismatch) when beta does not have `dim` entries.
  void validate(std::size_t dim) const;
};

/// 1 - exp(-w) for Re w >= 0 without cancellation near w = 0. exp(-w) is
/// flushed to zero once Re w > 700.
cplx one_minus_exp_neg(cplx w) noexcept;

/// z(xi) = alpha2 |xi|^2 + i beta.xi + nu
cplx symbol_z(std::span<const double> xi, const ModelParams& params) noexcept;

/// Lambda(xi) = z / (1 - exp(-z t0)), the exact inverse of the forward map at t0.
cplx lambda_multiplier(std::span<const double> xi, const ModelParams& params) noexcept;

/// (1 - exp(-z t)) / z, the map f^ -> u^(., t).
cplx forward_multiplier(std::span<const double> xi, double t, const ModelParams& params) noexcept;

/// z evaluated at every lattice point. The advection term uses the lattice's
/// odd frequencies, so the Nyquist plane carries no imaginary part and every
/// derived multiplier stays Hermitian.
std::vector<cplx> lattice_symbol(const FrequencyLattice& lattice, const ModelParams& params);

/// u^(xi, t) = (1 - exp(-z t)) / z * f^(xi), coefficient-wise. Requires t > 0.
SpectralField forward_hat(const SpectralField& f_hat, double t, const ModelParams& params);

/// Noiseless observation y = u(., t0) computed through the spectral path.
RealField synthesize_observation(const RealField& f, const ModelParams& params);

/// Independent check of the spectral forward map: second-order central
/// differences on the periodic box, Crank-Nicolson in time from u = 0 to t0
/// in `steps` equal steps. Linear systems are solved with BiCGSTAB.
RealField timestep_oracle(const RealField& f, const ModelParams& params, int steps);

}  // namespace srcid
