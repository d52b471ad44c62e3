#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "padiam/exact_law.hpp"

namespace padiam {

double conditional_probability(const EdgeEvent& given, const EdgeEvent& hit,
                               std::uint32_t n, const Params& params) {
  if (!given.disjoint_from(hit)) {
    throw std::invalid_argument("conditional_probability needs disjoint events");
  }
  if (hit.size() > kInclusionExclusionLimit) {
    throw std::invalid_argument(
        "inclusion-exclusion limited to |E'| <= " +
        std::to_string(kInclusionExclusionLimit) + "; use bound_conditional");
  }
  const double base = edge_set_probability(given, n, params);
  if (base <= 0.0) {
    throw std::domain_error("conditioning event has probability 0");
  }
  if (hit.empty()) return 0.0;

  // P[union over e in E' of {E + e}] = sum over nonempty S of
  // (-1)^{|S|+1} P[E + S].
  const auto edges = hit.edges();
  const std::uint32_t subsets = 1u << edges.size();
  long double total = 0.0L;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    std::vector<EdgeTriple> chosen;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (mask & (1u << k)) chosen.push_back(edges[k]);
    }
    const double joint =
        edge_set_probability(given.united(EdgeEvent(std::move(chosen))), n, params);
    total += (std::popcount(mask) % 2 == 1) ? joint : -joint;
  }
  return static_cast<double>(total / base);
}

double bound_conditional(std::size_t size_given, std::size_t size_hit,
                         std::uint32_t s, const Params& params) {
  if (s < 2) {
    throw std::invalid_argument("bound_conditional needs s >= 2, got " +
                                std::to_string(s));
  }
  const double m = params.m();
  const double d = params.delta();
  const double denominator = (2.0 * s - 2.0) * m + s * d;
  if (!(denominator > 0.0)) {
    throw std::domain_error("nonpositive denominator in conditional bound");
  }
  return (static_cast<double>(size_hit) * (m + d + 1.0) +
          static_cast<double>(size_given)) /
         denominator;
}

}  // namespace padiam
