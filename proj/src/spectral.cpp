#include "srcid/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "srcid/error.hpp"
#include "srcid/simd/kernels.hpp"

namespace srcid {

namespace {

void require_grid(const GridPtr& grid) {
  if (!grid) throw Error(ErrorCode::InvalidSpec, "field constructed without a grid");
}

void require_size(const GridPtr& grid, std::size_t n, const char* what) {
  if (n != grid->size()) {
    std::ostringstream msg;
    msg << what << ": " << n << " values for a grid of " << grid->size() << " nodes";
    throw Error(ErrorCode::InvalidSpec, msg.str());
  }
}

// The planner is not re-entrant; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

/// In-place unnormalised complex DFT over the grid shape.
void fft_inplace(const Grid& grid, std::vector<cplx>& data, int sign) {
  std::vector<int> dims(grid.dim());
  for (std::size_t k = 0; k < grid.dim(); ++k) dims[k] = static_cast<int>(grid.spec().samples[k]);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), buf, buf, sign, FFTW_ESTIMATE);
  }
  if (!plan) throw Error(ErrorCode::InvalidSpec, "FFT planner rejected the grid shape");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

/// Outer product of per-axis factors in row-major order.
std::vector<cplx> separable(const std::vector<std::vector<cplx>>& axes) {
  std::vector<cplx> out{cplx(1.0, 0.0)};
  for (const auto& axis : axes) {
    std::vector<cplx> next(out.size() * axis.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < axis.size(); ++j) next[i * axis.size() + j] = out[i] * axis[j];
    }
    out = std::move(next);
  }
  return out;
}

/// Per-axis phase exp(-i xi_m (lower + h/2)) with the argument reduced in
/// cycles so large boxes and frequencies keep full accuracy.
std::vector<cplx> offset_phase(const GridSpec& spec, std::size_t axis) {
  const std::size_t n = spec.samples[axis];
  const double offset_cycles = (spec.lower[axis] + 0.5 * spec.spacing(axis)) / spec.length(axis);
  std::vector<cplx> phase(n);
  for (std::size_t j = 0; j < n; ++j) {
    double cycles = static_cast<double>(signed_index(j, n)) * offset_cycles;
    cycles -= std::nearbyint(cycles);
    phase[j] = std::polar(1.0, -2.0 * std::numbers::pi * cycles);
  }
  return phase;
}

std::vector<cplx> forward_factor(const Grid& grid) {
  std::vector<std::vector<cplx>> axes;
  for (std::size_t k = 0; k < grid.dim(); ++k) {
    auto phase = offset_phase(grid.spec(), k);
    const double scale = grid.spacing(k) / std::sqrt(2.0 * std::numbers::pi);
    for (auto& p : phase) p *= scale;
    axes.push_back(std::move(phase));
  }
  return separable(axes);
}

std::vector<cplx> inverse_factor(const Grid& grid) {
  std::vector<std::vector<cplx>> axes;
  for (std::size_t k = 0; k < grid.dim(); ++k) {
    auto phase = offset_phase(grid.spec(), k);
    const double n = static_cast<double>(grid.spec().samples[k]);
    const double scale = std::sqrt(2.0 * std::numbers::pi) / (grid.spacing(k) * n);
    for (auto& p : phase) p = std::conj(p) * scale;
    axes.push_back(std::move(phase));
  }
  return separable(axes);
}

SpectralField forward_from_buffer(const GridPtr& grid, std::vector<cplx> data) {
  fft_inplace(*grid, data, FFTW_FORWARD);
  const auto factor = forward_factor(*grid);
  simd::complex_multiply(data, factor);
  return SpectralField(grid, std::move(data));
}

}  // namespace

RealField::RealField(GridPtr grid, std::vector<double> values) : grid_(std::move(grid)), values_(std::move(values)) {
  require_grid(grid_);
  require_size(grid_, values_.size(), "RealField");
}

RealField RealField::zeros(GridPtr grid) {
  require_grid(grid);
  const auto n = grid->size();
  return RealField(std::move(grid), std::vector<double>(n, 0.0));
}

void RealField::require_finite(const char* what) const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      std::ostringstream msg;
      msg << what << ": non-finite sample at node " << i;
      throw Error(ErrorCode::NonFinite, msg.str());
    }
  }
}

ComplexField::ComplexField(GridPtr grid, std::vector<cplx> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  require_grid(grid_);
  require_size(grid_, values_.size(), "ComplexField");
}

SpectralField::SpectralField(GridPtr grid, std::vector<cplx> coeffs)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
  require_grid(grid_);
  require_size(grid_, coeffs_.size(), "SpectralField");
}

std::size_t mirror_index(const Grid& grid, std::size_t flat) {
  std::size_t out = 0;
  for (std::size_t k = 0; k < grid.dim(); ++k) {
    const std::size_t n = grid.spec().samples[k];
    const std::size_t j = grid.axis_index(flat, k);
    if (n % 2 == 0 && j == n / 2) return grid.size();
    out += ((n - j) % n) * grid.stride(k);
  }
  return out;
}

SpectralField forward_transform(const RealField& f) {
  f.require_finite("forward_transform");
  std::vector<cplx> data(f.values().begin(), f.values().end());
  return forward_from_buffer(f.grid_ptr(), std::move(data));
}

SpectralField forward_transform(const ComplexField& f) {
  for (const auto& v : f.values()) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::NonFinite, "forward_transform: non-finite sample");
    }
  }
  return forward_from_buffer(f.grid_ptr(), std::vector<cplx>(f.values().begin(), f.values().end()));
}

ComplexField inverse_transform(const SpectralField& F) {
  for (const auto& c : F.coeffs()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::NonFinite, "inverse_transform: non-finite coefficient");
    }
  }
  std::vector<cplx> data(F.coeffs().begin(), F.coeffs().end());
  const auto factor = inverse_factor(F.grid());
  simd::complex_multiply(data, factor);
  fft_inplace(F.grid(), data, FFTW_BACKWARD);
  return ComplexField(F.grid_ptr(), std::move(data));
}

RealField inverse_transform_real(const SpectralField& F) {
  const auto z = inverse_transform(F);
  double max_re = 0.0, max_im = 0.0;
  simd::active_kernels().max_abs_parts(z.values().data(), z.size(), &max_re, &max_im);
  if (max_im > kHermitianTolerance * max_re) {
    std::ostringstream msg;
    msg << "inverse_transform_real: imaginary residue " << max_im << " exceeds " << kHermitianTolerance
        << " x max real part " << max_re;
    throw Error(ErrorCode::SymmetryViolation, msg.str());
  }
  std::vector<double> re(z.size());
  for (std::size_t i = 0; i < re.size(); ++i) re[i] = z.values()[i].real();
  return RealField(F.grid_ptr(), std::move(re));
}

SpectralField naive_dft(const RealField& f) {
  const auto& grid = f.grid();
  if (grid.size() > kNaiveDftMaxNodes) {
    std::ostringstream msg;
    msg << "naive_dft: " << grid.size() << " nodes exceeds the limit of " << kNaiveDftMaxNodes;
    throw Error(ErrorCode::GridTooLarge, msg.str());
  }
  f.require_finite("naive_dft");
  const FrequencyLattice lattice(grid.spec());
  const std::size_t n = grid.size(), d = grid.dim();

  std::vector<double> nodes(n * d), freqs(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    grid.node(i, std::span(nodes).subspan(i * d, d));
    lattice.frequency(i, std::span(freqs).subspan(i * d, d));
  }
  const double scale = grid.cell_volume() * std::pow(2.0 * std::numbers::pi, -0.5 * static_cast<double>(d));

  std::vector<cplx> coeffs(n);
  for (std::size_t j = 0; j < n; ++j) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double arg = 0.0;
      for (std::size_t k = 0; k < d; ++k) arg += freqs[j * d + k] * nodes[i * d + k];
      re += std::cos(arg) * f[i];
      im -= std::sin(arg) * f[i];
    }
    coeffs[j] = cplx(re * scale, im * scale);
  }
  return SpectralField(f.grid_ptr(), std::move(coeffs));
}

std::vector<cplx> evaluate_on_lattice(const FrequencyLattice& lattice,
                                      const std::function<cplx(std::size_t, std::span<const double>)>& fn) {
  std::vector<cplx> out(lattice.size());
  std::vector<double> xi(lattice.dim());
  for (std::size_t j = 0; j < out.size(); ++j) {
    lattice.frequency(j, xi);
    out[j] = fn(j, xi);
  }
  return out;
}

SpectralField apply_multiplier(SpectralField F, std::span<const cplx> multiplier) {
  if (multiplier.size() != F.size()) {
    throw Error(ErrorCode::GridMismatch, "apply_multiplier: multiplier length does not match the lattice");
  }
  simd::complex_multiply(F.coeffs(), multiplier);
  return F;
}

}  // namespace srcid
