#pragma once

#include <map>
#include <string>
#include <string_view>

#include "padiam/params.hpp"

namespace padiam {

/// Diameter regimes of the affine preferential attachment model.
enum class Regime {
  kM1,             // m = 1
  kNegativeDelta,  // m >= 2, delta < 0
  kZeroDelta,      // m >= 2, delta = 0 (result known for a self-loop variant)
  kPositiveDelta,  // m >= 2, delta > 0
};

Regime classify_regime(const Params& params);
std::string_view regime_tag(Regime regime);

/// nu = (2m(m+d) + 2 sqrt(m(m-1)(m+d)(m+d+1))) / d, the exponential growth
/// rate of the local weak limit. Requires m >= 2 and delta > 0; throws
/// std::domain_error otherwise.
double growth_rate_nu(const Params& params);

/// ln(n) / ln(nu).
double log_nu(double n, const Params& params);

/// Root in (0, 1) of theta + (1 + delta)(1 + ln theta) = 0, delta > -1.
/// Bisection on [1e-15, 1 - 1e-15] down to adjacent doubles.
double theta_root(double delta);

/// Leading-order diameter prediction at size n.
struct RegimePrediction {
  Regime regime = Regime::kM1;
  double predicted_value = 0.0;
  std::map<std::string, double> constants;  // nu, theta, ...
  bool variant_model = false;  // the delta = 0 law concerns a self-loop variant
};

/// m = 1:           2(1+d) ln n / ((2+d) theta)
/// m >= 2, d < 0:   (4 / |ln(1 + d/m)| + 2 / ln m) ln ln n
/// m >= 2, d = 0:   ln n / ln ln n
/// m >= 2, d > 0:   ln n / ln nu
/// Throws std::invalid_argument when n <= 1, or n <= e for the two
/// ln ln n regimes. Every n >= 3 is accepted.
RegimePrediction predicted_diameter(double n, const Params& params);

}  // namespace padiam
