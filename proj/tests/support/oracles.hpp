#pragma once

// High-precision reference evaluations, independent of the library code.

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace srcid::testing {

using Hp = boost::multiprecision::cpp_bin_float_50;

/// (ratio)^{1/(p+2)} evaluated in 50 digits.
inline double hp_rule_mu(double numerator, double denominator, double p) {
  const Hp ratio = Hp(numerator) / Hp(denominator);
  return static_cast<double>(boost::multiprecision::exp(boost::multiprecision::log(ratio) / (Hp(p) + 2)));
}

}  // namespace srcid::testing
