#pragma once

#include "srcid/spectral.hpp"

namespace srcid {

/// sqrt(h^n sum f_i^2), the rectangle rule. Parseval-consistent with
/// forward_transform.
double l2_norm(const RealField& f);

/// sqrt(dxi^n sum |F_j|^2 (1 + |xi_j|^2)^p) over the transform of f. p >= 0.
double hp_norm(const RealField& f, double p);

/// One row of an error table. rel_* = abs_* / l2_norm(f).
struct ErrorReport {
  double epsilon = 0.0;
  double delta = 0.0;
  double mu = 0.0;
  double abs_unreg = 0.0;
  double abs_reg = 0.0;
  double rel_unreg = 0.0;
  double rel_reg = 0.0;
  double theoretical_bound = 0.0;
};

struct ReportContext {
  double epsilon = 0.0;
  double delta = 0.0;
  double mu = 0.0;
  double theoretical_bound = 0.0;
};

/// Throws Error(GridMismatch) unless all three fields share one grid, and
/// Error(NonFinite) if any entry comes out non-finite.
ErrorReport error_report(const RealField& f, const RealField& f_unreg, const RealField& f_reg,
                         const ReportContext& context);

}  // namespace srcid
