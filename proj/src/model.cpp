#include "srcid/model.hpp"

#include <cmath>
#include <sstream>

#include "srcid/error.hpp"
#include "srcid/simd/kernels.hpp"

namespace srcid {

void ModelParams::validate(std::size_t dim) const {
  auto bad = [](const char* what) { throw Error(ErrorCode::InvalidSpec, std::string("invalid model: ") + what); };
  if (!(alpha2 > 0.0) || !std::isfinite(alpha2)) bad("alpha2 must be positive");
  if (!(nu > 0.0) || !std::isfinite(nu)) bad("nu must be positive");
  if (!(t0 > 0.0) || !std::isfinite(t0)) bad("t0 must be positive");
  for (double b : beta) {
    if (!std::isfinite(b)) bad("beta must be finite");
  }
  if (beta.size() != dim) {
    std::ostringstream msg;
    msg << "model has " << beta.size() << " advection components for a " << dim << "-dimensional grid";
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
}

cplx one_minus_exp_neg(cplx w) noexcept {
  const double a = w.real(), b = w.imag();
  if (a > 700.0) return {1.0, 0.0};
  const double e = std::exp(-a);
  const double s = std::sin(0.5 * b);
  // 1 - e^{-a} cos b = (1 - e^{-a}) + 2 e^{-a} sin^2(b/2), both terms >= 0.
  return {-std::expm1(-a) + 2.0 * e * s * s, e * std::sin(b)};
}

cplx symbol_z(std::span<const double> xi, const ModelParams& params) noexcept {
  double xi2 = 0.0, adv = 0.0;
  for (std::size_t k = 0; k < xi.size(); ++k) {
    xi2 += xi[k] * xi[k];
    adv += params.beta[k] * xi[k];
  }
  return {params.alpha2 * xi2 + params.nu, adv};
}

cplx lambda_multiplier(std::span<const double> xi, const ModelParams& params) noexcept {
  const cplx z = symbol_z(xi, params);
  return z / one_minus_exp_neg(z * params.t0);
}

cplx forward_multiplier(std::span<const double> xi, double t, const ModelParams& params) noexcept {
  const cplx z = symbol_z(xi, params);
  return one_minus_exp_neg(z * t) / z;
}

std::vector<cplx> lattice_symbol(const FrequencyLattice& lattice, const ModelParams& params) {
  params.validate(lattice.dim());
  std::vector<cplx> z(lattice.size());
  for (std::size_t flat = 0; flat < z.size(); ++flat) {
    double xi2 = 0.0, adv = 0.0;
    for (std::size_t k = 0; k < lattice.dim(); ++k) {
      const std::size_t j = lattice.axis_index(flat, k);
      const double xi = lattice.axis(k)[j];
      xi2 += xi * xi;
      adv += params.beta[k] * lattice.odd_frequency(k, j);
    }
    z[flat] = cplx(params.alpha2 * xi2 + params.nu, adv);
  }
  return z;
}

SpectralField forward_hat(const SpectralField& f_hat, double t, const ModelParams& params) {
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidSpec, "forward_hat: t must be positive");
  auto mult = lattice_symbol(f_hat.lattice(), params);
  for (auto& z : mult) z = one_minus_exp_neg(z * t) / z;
  return apply_multiplier(f_hat, mult);
}

RealField synthesize_observation(const RealField& f, const ModelParams& params) {
  return inverse_transform_real(forward_hat(forward_transform(f), params.t0, params));
}

namespace {

/// out = a*u + b*(L u) where L is the periodic central-difference operator
/// alpha2 Lap - beta . grad - nu.
class PeriodicOperator {
 public:
  PeriodicOperator(const Grid& grid, const ModelParams& params) : grid_(grid), params_(params) {}

  void combine(double a, double b, std::span<const double> u, std::span<double> out) const {
    const std::size_t d = grid_.dim();
    for (std::size_t i = 0; i < u.size(); ++i) {
      double lu = -params_.nu * u[i];
      for (std::size_t k = 0; k < d; ++k) {
        const std::size_t n = grid_.spec().samples[k];
        const std::size_t s = grid_.stride(k);
        const std::size_t j = grid_.axis_index(i, k);
        const std::size_t up = j + 1 < n ? i + s : i - (n - 1) * s;
        const std::size_t dn = j > 0 ? i - s : i + (n - 1) * s;
        const double h = grid_.spacing(k);
        lu += params_.alpha2 * (u[up] - 2.0 * u[i] + u[dn]) / (h * h);
        lu -= params_.beta[k] * (u[up] - u[dn]) / (2.0 * h);
      }
      out[i] = a * u[i] + b * lu;
    }
  }

 private:
  const Grid& grid_;
  const ModelParams& params_;
};

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Solves (I - c L) x = rhs, x holding the initial guess on entry.
void bicgstab(const PeriodicOperator& op, double c, std::span<const double> rhs, std::span<double> x) {
  const std::size_t n = rhs.size();
  std::vector<double> r(n), r0(n), p(n, 0.0), v(n, 0.0), s(n), t(n);
  op.combine(1.0, -c, x, r);
  for (std::size_t i = 0; i < n; ++i) r[i] = rhs[i] - r[i];
  r0 = r;
  const double target = 1e-13 * std::sqrt(std::max(dot(rhs, rhs), 1e-300));
  double rho = 1.0, alpha = 1.0, omega = 1.0;
  for (int iter = 0; iter < 2000; ++iter) {
    if (std::sqrt(dot(r, r)) <= target) return;
    const double rho_next = dot(r0, r);
    if (rho_next == 0.0) break;
    const double beta = (rho_next / rho) * (alpha / omega);
    rho = rho_next;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
    op.combine(1.0, -c, p, v);
    const double r0v = dot(r0, v);
    if (r0v == 0.0) break;
    alpha = rho / r0v;
    for (std::size_t i = 0; i < n; ++i) s[i] = r[i] - alpha * v[i];
    if (std::sqrt(dot(s, s)) <= target) {
      simd::axpy(alpha, p, x);
      return;
    }
    op.combine(1.0, -c, s, t);
    const double tt = dot(t, t);
    if (tt == 0.0) break;
    omega = dot(t, s) / tt;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i] + omega * s[i];
      r[i] = s[i] - omega * t[i];
    }
    if (omega == 0.0) break;
  }
  if (std::sqrt(dot(r, r)) > target) {
    throw Error(ErrorCode::SingularSolve, "timestep_oracle: Crank-Nicolson solve did not converge");
  }
}

}  // namespace

RealField timestep_oracle(const RealField& f, const ModelParams& params, int steps) {
  if (steps < 1) throw Error(ErrorCode::InvalidSpec, "timestep_oracle: steps must be >= 1");
  f.require_finite("timestep_oracle");
  const auto& grid = f.grid();
  params.validate(grid.dim());

  const PeriodicOperator op(grid, params);
  const double dt = params.t0 / steps;
  const std::size_t n = grid.size();
  std::vector<double> u(n, 0.0), rhs(n);
  for (int step = 0; step < steps; ++step) {
    op.combine(1.0, 0.5 * dt, u, rhs);
    simd::axpy(dt, f.values(), rhs);
    bicgstab(op, 0.5 * dt, rhs, u);
  }
  return RealField(f.grid_ptr(), std::move(u));
}

}  // namespace srcid
