#include "srcid/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "srcid/error.hpp"

namespace srcid {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::InvalidSpec, std::string("regularization: ") + what + " must be positive and finite");
  }
}

}  // namespace

void RegConfig::validate() const {
  if (std::isinf(p)) throw Error(ErrorCode::InvalidSpec, "regularization: p = infinity is not supported");
  require_positive(p, "p");
  std::visit(overloaded{
                 [](const KnownC& r) {
                   if (r.C) require_positive(*r.C, "C");
                 },
                 [](const PlainDelta&) {},
                 [](const MaxNoise& r) {
                   if (r.delta_M) require_positive(*r.delta_M, "delta_M");
                 },
             },
             rule);
  if (mu_override) require_positive(*mu_override, "mu override");
}

std::string rule_name(const ParameterRule& rule) {
  return std::visit(overloaded{
                        [](const KnownC&) { return std::string("known-c"); },
                        [](const PlainDelta&) { return std::string("plain-delta"); },
                        [](const MaxNoise&) { return std::string("max-noise"); },
                    },
                    rule);
}

double choose_mu(const RegConfig& config, double delta) {
  config.validate();
  if (config.mu_override) return *config.mu_override;
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    std::ostringstream msg;
    msg << "choose_mu: noise level must be positive, got " << delta;
    throw Error(ErrorCode::NonpositiveDelta, msg.str());
  }
  const double exponent = 1.0 / (config.p + 2.0);
  return std::visit(overloaded{
                        [&](const KnownC& r) {
                          if (!r.C) throw Error(ErrorCode::InvalidConfig, "choose_mu: known-c rule has no C");
                          return std::pow(delta / *r.C, exponent);
                        },
                        [&](const PlainDelta&) { return std::pow(delta, exponent); },
                        [&](const MaxNoise& r) {
                          if (!r.delta_M) {
                            throw Error(ErrorCode::InvalidConfig, "choose_mu: max-noise rule has no delta_M");
                          }
                          if (delta > *r.delta_M) {
                            std::ostringstream msg;
                            msg << "choose_mu: delta " << delta << " exceeds delta_M " << *r.delta_M;
                            throw Error(ErrorCode::DeltaExceedsDeltaM, msg.str());
                          }
                          return std::pow(delta / *r.delta_M, exponent);
                        },
                    },
                    config.rule);
}

std::optional<std::string> regime_warning(const RegConfig& config, double delta, double mu) {
  std::ostringstream msg;
  if (const auto* r = std::get_if<KnownC>(&config.rule); r && r->C && delta > *r->C) {
    msg << "delta " << delta << " exceeds C " << *r->C << "; ";
  }
  if (mu >= 1.0) msg << "mu = " << mu << " >= 1, outside the range the error bounds assume";
  auto s = msg.str();
  if (s.empty()) return std::nullopt;
  return s;
}

double bound_M(const ModelParams& params, std::size_t n) {
  double beta_inf = 0.0;
  for (double b : params.beta) beta_inf = std::max(beta_inf, std::fabs(b));
  const double adv = std::sqrt(static_cast<double>(n)) * beta_inf;
  const double small_freq = 1.0 / params.t0 + adv / (2.0 * params.nu * params.t0);
  const double large_freq = params.nu + params.alpha2 + adv / 2.0;
  return std::max(small_freq, large_freq);
}

double bound_K(const ModelParams& params, const RegConfig& config, std::size_t n, double C_norm) {
  const double M = bound_M(params, n);
  if (const auto* r = std::get_if<MaxNoise>(&config.rule)) {
    if (!r->delta_M) throw Error(ErrorCode::InvalidConfig, "bound_K: max-noise rule has no delta_M");
    return C_norm + 2.0 * std::pow(*r->delta_M, 4.0 / (config.p + 2.0)) * M;
  }
  return C_norm + 2.0 * M;
}

double known_c_bound(double delta, double C, double p, double M) {
  const double q = p + 2.0;
  return 2.0 * std::pow(delta, p / q) * std::pow(C, 2.0 / q) *
         (M + 0.5 * std::max(1.0, std::pow(delta / C, (2.0 - p) / q)));
}

double holder_bound(double K, double r, double p) {
  const double q = p + 2.0;
  return K * std::max(std::pow(r, 2.0 / q), std::pow(r, p / q));
}

double theoretical_bound(const RegConfig& config, double delta, const ModelParams& params, std::size_t n,
                         double C_norm) {
  if (delta <= 0.0) return 0.0;
  const double M = bound_M(params, n);
  return std::visit(overloaded{
                        [&](const KnownC& r) { return known_c_bound(delta, r.C.value_or(C_norm), config.p, M); },
                        [&](const PlainDelta&) {
                          return holder_bound(bound_K(params, config, n, C_norm), delta, config.p);
                        },
                        [&](const MaxNoise& r) {
                          if (!r.delta_M) throw Error(ErrorCode::InvalidConfig, "theoretical_bound: no delta_M");
                          return holder_bound(bound_K(params, config, n, C_norm), delta / *r.delta_M, config.p);
                        },
                    },
                    config.rule);
}

std::vector<cplx> lambda_on_lattice(const FrequencyLattice& lattice, const ModelParams& params) {
  auto z = lattice_symbol(lattice, params);
  for (auto& v : z) v = v / one_minus_exp_neg(v * params.t0);
  return z;
}

std::vector<cplx> regularized_multiplier(const FrequencyLattice& lattice, const ModelParams& params, double mu) {
  auto m = lambda_on_lattice(lattice, params);
  const double mu2 = mu * mu;
  for (std::size_t j = 0; j < m.size(); ++j) m[j] /= 1.0 + mu2 * lattice.norm_squared(j);
  return m;
}

RealField regularized_invert(const RealField& y_delta, const ModelParams& params, double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorCode::InvalidSpec, "regularized_invert: mu must be positive");
  }
  const auto& grid = y_delta.grid();
  const FrequencyLattice lattice(grid.spec());
  const auto m = regularized_multiplier(lattice, params, mu);
  if (mu < 1.0) {
    double sup = 0.0;
    for (const auto& v : m) sup = std::max(sup, std::abs(v));
    const double limit = 2.0 * bound_M(params, grid.dim()) / (mu * mu);
    if (sup > limit * (1.0 + 1e-9)) {
      std::ostringstream msg;
      msg << "regularized_invert: multiplier supremum " << sup << " exceeds 2M/mu^2 = " << limit;
      throw Error(ErrorCode::BoundViolation, msg.str());
    }
  }
  return inverse_transform_real(apply_multiplier(forward_transform(y_delta), m));
}

RealField unregularized_invert(const RealField& y_delta, const ModelParams& params) {
  const FrequencyLattice lattice(y_delta.grid().spec());
  return inverse_transform_real(apply_multiplier(forward_transform(y_delta), lambda_on_lattice(lattice, params)));
}

}  // namespace srcid
