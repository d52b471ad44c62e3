#include "padiam/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace padiam {

Regime classify_regime(const Params& params) {
  if (params.m() == 1) return Regime::kM1;
  if (params.delta() < 0.0) return Regime::kNegativeDelta;
  if (params.delta() == 0.0) return Regime::kZeroDelta;
  return Regime::kPositiveDelta;
}

std::string_view regime_tag(Regime regime) {
  switch (regime) {
    case Regime::kM1:
      return "m1";
    case Regime::kNegativeDelta:
      return "negative_delta";
    case Regime::kZeroDelta:
      return "zero_delta";
    case Regime::kPositiveDelta:
      return "positive_delta";
  }
  return "unknown";
}

double growth_rate_nu(const Params& params) {
  if (classify_regime(params) != Regime::kPositiveDelta) {
    throw std::domain_error("growth rate nu needs m >= 2 and delta > 0, got m=" +
                            std::to_string(params.m()) +
                            " delta=" + std::to_string(params.delta()));
  }
  const double m = params.m();
  const double d = params.delta();
  const double nu =
      (2.0 * m * (m + d) + 2.0 * std::sqrt(m * (m - 1.0) * (m + d) * (m + d + 1.0))) / d;
  if (!(nu > 1.0)) throw std::logic_error("growth rate nu must exceed 1");
  return nu;
}

double log_nu(double n, const Params& params) {
  return std::log(n) / std::log(growth_rate_nu(params));
}

double theta_root(double delta) {
  if (!(delta > -1.0)) {
    throw std::domain_error("theta_root needs delta > -1");
  }
  // f is increasing on (0, 1): f'(theta) = 1 + (1 + delta) / theta > 0.
  auto f = [delta](double theta) {
    return theta + (1.0 + delta) * (1.0 + std::log(theta));
  };
  double lo = 1e-15;
  double hi = 1.0 - 1e-15;
  if (!(f(lo) < 0.0 && f(hi) > 0.0)) {
    throw std::logic_error("theta bracket does not straddle the root");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return std::fabs(f(lo)) <= std::fabs(f(hi)) ? lo : hi;
}

RegimePrediction predicted_diameter(double n, const Params& params) {
  if (!(n > 1.0)) {
    throw std::invalid_argument("predicted_diameter needs n > 1");
  }
  RegimePrediction out;
  out.regime = classify_regime(params);
  const double m = params.m();
  const double d = params.delta();
  const double log_n = std::log(n);
  auto log_log_n = [&] {
    if (!(n > std::numbers::e)) {
      throw std::invalid_argument("this regime's formula needs n > e");
    }
    return std::log(log_n);
  };

  switch (out.regime) {
    case Regime::kM1: {
      const double theta = theta_root(d);
      out.constants["theta"] = theta;
      out.predicted_value = 2.0 * (1.0 + d) * log_n / ((2.0 + d) * theta);
      break;
    }
    case Regime::kNegativeDelta: {
      const double log_ratio = std::fabs(std::log(1.0 + d / m));
      out.constants["abs_log_1_plus_delta_over_m"] = log_ratio;
      out.constants["log_m"] = std::log(m);
      out.predicted_value = (4.0 / log_ratio + 2.0 / std::log(m)) * log_log_n();
      break;
    }
    case Regime::kZeroDelta:
      out.variant_model = true;
      out.predicted_value = log_n / log_log_n();
      break;
    case Regime::kPositiveDelta: {
      const double nu = growth_rate_nu(params);
      out.constants["nu"] = nu;
      out.predicted_value = log_n / std::log(nu);
      break;
    }
  }
  return out;
}

}  // namespace padiam
