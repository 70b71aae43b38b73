#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "srcid/grid.hpp"

namespace srcid {

using cplx = std::complex<double>;

/// Samples of a real function on a grid, row-major.
class RealField {
 public:
  RealField(GridPtr grid, std::vector<double> values);
  static RealField zeros(GridPtr grid);

  const Grid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double& operator[](std::size_t i) noexcept { return values_[i]; }

  /// Throws Error(NonFinite) on the first NaN/Inf sample.
  void require_finite(const char* what) const;

 private:
  GridPtr grid_;
  std::vector<double> values_;
};

/// Complex samples on a grid; the general output of the inverse transform.
class ComplexField {
 public:
  ComplexField(GridPtr grid, std::vector<cplx> values);

  const Grid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const cplx> values() const noexcept { return values_; }
  std::span<cplx> values() noexcept { return values_; }

 private:
  GridPtr grid_;
  std::vector<cplx> values_;
};

/// Coefficients approximating the continuous transform
///   g^(xi) = (2 pi)^{-n/2} \int e^{-i xi.x} g(x) dx
/// on the angular-frequency lattice of the grid, DFT ordering.
class SpectralField {
 public:
  SpectralField(GridPtr grid, std::vector<cplx> coeffs);

  const Grid& grid() const noexcept { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  std::span<cplx> coeffs() noexcept { return coeffs_; }
  cplx operator[](std::size_t i) const noexcept { return coeffs_[i]; }

  FrequencyLattice lattice() const { return FrequencyLattice(grid_->spec()); }

 private:
  GridPtr grid_;
  std::vector<cplx> coeffs_;
};

/// Flat index of the lattice point -xi for the point at `flat`, or
/// size() when -xi is not on the lattice (a Nyquist component).
std::size_t mirror_index(const Grid& grid, std::size_t flat);

/// Riemann-sum transform evaluated with an FFT; the box offset and the
/// half-cell shift enter as an exact per-frequency phase.
SpectralField forward_transform(const RealField& f);
SpectralField forward_transform(const ComplexField& f);

/// Exact discrete inverse of forward_transform.
ComplexField inverse_transform(const SpectralField& F);

/// inverse_transform followed by the Hermitian check: throws
/// Error(SymmetryViolation) when max|Im| > 1e-8 max|Re|, otherwise drops Im.
RealField inverse_transform_real(const SpectralField& F);

/// Direct O(N^2) evaluation of the same sum. Test oracle; grids limited to
/// 4096 nodes (Error(GridTooLarge) otherwise).
SpectralField naive_dft(const RealField& f);

inline constexpr std::size_t kNaiveDftMaxNodes = 4096;
inline constexpr double kHermitianTolerance = 1e-8;

/// Evaluates a multiplier at every lattice point (flat index, frequency vector).
std::vector<cplx> evaluate_on_lattice(const FrequencyLattice& lattice,
                                      const std::function<cplx(std::size_t, std::span<const double>)>& fn);

/// F[j] *= m[j] for every coefficient.
SpectralField apply_multiplier(SpectralField F, std::span<const cplx> multiplier);

}  // namespace srcid
