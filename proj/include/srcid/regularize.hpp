#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "srcid/model.hpp"
#include "srcid/spectral.hpp"

namespace srcid {

/// mu^2 = (delta / C)^{2/(p+2)} with C >= ||f||_{H^p}. An empty C is resolved
/// from the true source when one is available (synthetic runs).
struct KnownC {
  std::optional<double> C;
};

/// mu^2 = delta^{2/(p+2)}
struct PlainDelta {};

/// mu^2 = (delta / delta_M)^{2/(p+2)}. An empty delta_M is resolved as 1.05 x
/// the largest delta of the experiment's epsilon sweep.
struct MaxNoise {
  std::optional<double> delta_M;
};

using ParameterRule = std::variant<KnownC, PlainDelta, MaxNoise>;

struct RegConfig {
  double p = 1.0;
  ParameterRule rule = PlainDelta{};
  std::optional<double> mu_override;

  void validate() const;
};

std::string rule_name(const ParameterRule& rule);

/// The regularisation parameter mu (not mu^2) selected by the rule, or the
/// override when one is set.
double choose_mu(const RegConfig& config, double delta);

/// Non-fatal regime notes: mu >= 1 leaves the range the error bounds assume,
/// and KnownC with delta > C is outside the intended use of the rule.
std::optional<std::string> regime_warning(const RegConfig& config, double delta, double mu);

/// M = max{ 1/t0 + sqrt(n)|beta|_inf / (2 nu t0),  nu + alpha2 + sqrt(n)|beta|_inf / 2 }
double bound_M(const ModelParams& params, std::size_t n);

/// K = C + 2M, or C + 2 delta_M^{4/(p+2)} M under the MaxNoise rule.
double bound_K(const ModelParams& params, const RegConfig& config, std::size_t n, double C_norm);

/// 2 delta^{p/(p+2)} C^{2/(p+2)} [ M + 1/2 max{1, (delta/C)^{(2-p)/(p+2)}} ]
double known_c_bound(double delta, double C, double p, double M);

/// K max{ r^{2/(p+2)}, r^{p/(p+2)} }
double holder_bound(double K, double r, double p);

/// Error bound matching the rule in force: known_c_bound for KnownC, the
/// Holder form in delta (PlainDelta) or delta/delta_M (MaxNoise) otherwise.
double theoretical_bound(const RegConfig& config, double delta, const ModelParams& params, std::size_t n,
                         double C_norm);

/// Lambda(xi) / (1 + mu^2 |xi|^2) on the lattice.
std::vector<cplx> regularized_multiplier(const FrequencyLattice& lattice, const ModelParams& params, double mu);

/// Lambda(xi) on the lattice.
std::vector<cplx> lambda_on_lattice(const FrequencyLattice& lattice, const ModelParams& params);

/// f_{delta,mu} = F^{-1}[ Lambda / (1 + mu^2 |xi|^2) F[y_delta] ].
/// For 0 < mu < 1 the multiplier's supremum is checked against 2M/mu^2 and
/// Error(BoundViolation) is raised if it is exceeded.
RealField regularized_invert(const RealField& y_delta, const ModelParams& params, double mu);

/// f_delta = F^{-1}[ Lambda F[y_delta] ], the unstable baseline.
RealField unregularized_invert(const RealField& y_delta, const ModelParams& params);

}  // namespace srcid
