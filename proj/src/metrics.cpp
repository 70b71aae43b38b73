#include "srcid/metrics.hpp"

#include <cmath>

#include "srcid/error.hpp"
#include "srcid/simd/kernels.hpp"

namespace srcid {

double l2_norm(const RealField& f) {
  return std::sqrt(f.grid().cell_volume() * simd::sum_squares(f.values()));
}

double hp_norm(const RealField& f, double p) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw Error(ErrorCode::InvalidSpec, "hp_norm: p must be finite and >= 0");
  const auto F = forward_transform(f);
  const auto lattice = F.lattice();
  std::vector<double> w(F.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = std::pow(1.0 + lattice.norm_squared(j), p);
  return std::sqrt(lattice.cell_volume() * simd::weighted_power(F.coeffs(), w));
}

ErrorReport error_report(const RealField& f, const RealField& f_unreg, const RealField& f_reg,
                         const ReportContext& context) {
  if (f.grid().spec() != f_unreg.grid().spec() || f.grid().spec() != f_reg.grid().spec()) {
    throw Error(ErrorCode::GridMismatch, "error_report: fields live on different grids");
  }
  const double h = f.grid().cell_volume();
  const double norm = l2_norm(f);
  ErrorReport r;
  r.epsilon = context.epsilon;
  r.delta = context.delta;
  r.mu = context.mu;
  r.theoretical_bound = context.theoretical_bound;
  r.abs_unreg = std::sqrt(h * simd::sum_squared_difference(f.values(), f_unreg.values()));
  r.abs_reg = std::sqrt(h * simd::sum_squared_difference(f.values(), f_reg.values()));
  r.rel_unreg = r.abs_unreg / norm;
  r.rel_reg = r.abs_reg / norm;
  for (double v : {r.epsilon, r.delta, r.mu, r.abs_unreg, r.abs_reg, r.rel_unreg, r.rel_reg, r.theoretical_bound}) {
    if (!std::isfinite(v) || v < 0.0) throw Error(ErrorCode::NonFinite, "error_report: non-finite or negative entry");
  }
  return r;
}

}  // namespace srcid
