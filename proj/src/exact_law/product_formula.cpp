#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "padiam/exact_law.hpp"

namespace padiam {

namespace {

void check_event(const EdgeEvent& event, std::uint32_t n, const Params& params) {
  for (const EdgeTriple& e : event.edges()) {
    if (e.newer == 0 || e.target == 0) {
      throw std::invalid_argument("edge labels are 1-based");
    }
    if (e.newer > n) {
      throw std::invalid_argument("edge newer label " +
                                  std::to_string(e.newer) + " exceeds n = " +
                                  std::to_string(n));
    }
    if (e.slot < 1 || e.slot > static_cast<std::uint32_t>(params.m())) {
      throw std::invalid_argument("edge slot " + std::to_string(e.slot) +
                                  " outside [1, " +
                                  std::to_string(params.m()) + "]");
    }
  }
}

// Log-space kicks in for long products where the linear-space product could
// underflow.
constexpr std::size_t kLinearMaxEdges = 8;
constexpr std::uint32_t kLinearMaxN = 1000;

}  // namespace

double falling_factorial(double x, std::uint32_t r) {
  double result = 1.0;
  for (std::uint32_t k = 0; k < r; ++k) result *= x - k;
  return result;
}

EventProbability edge_set_probability_detailed(const EdgeEvent& event,
                                               std::uint32_t n,
                                               const Params& params) {
  check_event(event, n, params);
  if (event.structurally_impossible()) {
    return {0.0, -std::numeric_limits<double>::infinity()};
  }
  if (event.empty()) return {1.0, 0.0};

  Vertex top = 0;
  for (const EdgeTriple& e : event.edges()) top = std::max(top, e.newer);

  // p[s]: triples landing on s. span[s]: difference array for q_s.
  std::vector<std::uint32_t> p(top + 2, 0);
  std::vector<std::int64_t> span(top + 2, 0);
  for (const EdgeTriple& e : event.edges()) {
    ++p[e.target];
    ++span[e.target + 1];
    --span[e.newer];
  }

  const double m = params.m();
  const double d = params.delta();
  const bool use_logs = event.size() > kLinearMaxEdges || n > kLinearMaxN;

  long double product = 1.0L;
  double log_sum = 0.0;
  std::int64_t q_running = 0;
  for (Vertex s = 1; s <= top; ++s) {
    q_running += span[s];
    if (s < 2) continue;
    const auto ps = p[s];
    const auto qs = static_cast<std::uint32_t>(q_running);
    if (ps + qs == 0) continue;
    const double sd = s;
    const double landing_base = m + d;                          // (m+d+p-1)_p
    const double passing_base = (2 * sd - 3) * m + (sd - 1) * d;  // (..+q-1)_q
    const double total_base = (2 * sd - 2) * m + sd * d;          // (..+p+q-1)_{p+q}
    if (use_logs) {
      for (std::uint32_t k = 0; k < ps; ++k) log_sum += std::log(landing_base + k);
      for (std::uint32_t k = 0; k < qs; ++k) log_sum += std::log(passing_base + k);
      for (std::uint32_t k = 0; k < ps + qs; ++k) {
        log_sum -= std::log(total_base + k);
      }
    } else {
      product *= falling_factorial(landing_base + ps - 1, ps);
      product *= falling_factorial(passing_base + qs - 1, qs);
      product /= falling_factorial(total_base + ps + qs - 1, ps + qs);
    }
  }

  if (use_logs) return {std::exp(log_sum), log_sum};
  const auto probability = static_cast<double>(product);
  return {probability, std::log(probability)};
}

double edge_set_probability(const EdgeEvent& event, std::uint32_t n,
                            const Params& params) {
  return edge_set_probability_detailed(event, n, params).probability;
}

}  // namespace padiam
