#include <stdexcept>
#include <string>
#include <vector>

#include "padiam/exact_law.hpp"

namespace padiam {

namespace {

inline constexpr std::uint32_t kMaxEnumerationN = 6;

// Depth-first walk over every attachment choice in generation order, so
// outcomes come out in mixed-radix order. The probability of a path is the
// product of the sequential conditionals (D_k + delta) / total.
class Enumerator {
 public:
  Enumerator(std::uint32_t n, const Params& params, ExactDistribution& out)
      : n_(n),
        m_(static_cast<std::uint32_t>(params.m())),
        delta_(params.delta()),
        degrees_(n + 1, 0),
        out_(out) {
    degrees_[1] = m_;
    degrees_[2] = m_;
    targets_.reserve(static_cast<std::size_t>(m_) * n);
  }

  void run() { step(3, 1, 1.0L); }

 private:
  void step(Vertex t, std::uint32_t i, long double path_probability) {
    if (t > n_) {
      out_.outcomes.push_back(
          {targets_, static_cast<double>(path_probability)});
      return;
    }
    if (i > m_) {
      degrees_[t] += m_;
      step(t + 1, 1, path_probability);
      degrees_[t] -= m_;
      return;
    }
    long double total = 0.0L;
    for (Vertex k = 1; k < t; ++k) total += degrees_[k] + static_cast<long double>(delta_);
    for (Vertex k = 1; k < t; ++k) {
      const long double weight = degrees_[k] + static_cast<long double>(delta_);
      ++degrees_[k];
      targets_.push_back(k);
      step(t, i + 1, path_probability * (weight / total));
      targets_.pop_back();
      --degrees_[k];
    }
  }

  std::uint32_t n_;
  std::uint32_t m_;
  double delta_;
  std::vector<std::int64_t> degrees_;
  std::vector<Vertex> targets_;
  ExactDistribution& out_;
};

long double neumaier_sum(const std::vector<long double>& terms) {
  long double sum = 0.0L;
  long double compensation = 0.0L;
  for (long double x : terms) {
    const long double t = sum + x;
    if ((sum >= 0 ? sum : -sum) >= (x >= 0 ? x : -x)) {
      compensation += (sum - t) + x;
    } else {
      compensation += (x - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

bool outcome_contains(const ExactDistribution& dist, std::size_t id,
                      const EdgeTriple& e) {
  if (e.newer == 2) return e.target == 1;
  const std::size_t m = static_cast<std::size_t>(dist.params.m());
  return dist.outcomes[id].targets[(e.newer - 3) * m + (e.slot - 1)] ==
         e.target;
}

void check_against(const ExactDistribution& dist, const EdgeEvent& event) {
  for (const EdgeTriple& e : event.edges()) {
    if (e.newer == 0 || e.target == 0 || e.newer > dist.n || e.slot < 1 ||
        e.slot > static_cast<std::uint32_t>(dist.params.m())) {
      throw std::invalid_argument("event triple outside the enumerated model");
    }
  }
}

}  // namespace

std::vector<EdgeTriple> ExactDistribution::edge_sequence(
    std::size_t outcome_id) const {
  const auto m = static_cast<std::uint32_t>(params.m());
  std::vector<EdgeTriple> edges;
  for (std::uint32_t i = 1; i <= m; ++i) edges.push_back({2, i, 1});
  const auto& targets = outcomes.at(outcome_id).targets;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    edges.push_back({static_cast<Vertex>(3 + k / m),
                     static_cast<std::uint32_t>(1 + k % m), targets[k]});
  }
  return edges;
}

std::uint64_t outcome_count(std::uint32_t n, int m) {
  std::uint64_t count = 1;
  for (std::uint32_t t = 3; t <= n; ++t) {
    for (int i = 0; i < m; ++i) {
      count *= t - 1;
      if (count > kEnumerationGuard) return kEnumerationGuard + 1;
    }
  }
  return count;
}

ExactDistribution enumerate_distribution(std::uint32_t n,
                                         const Params& params) {
  if (n < 2 || n > kMaxEnumerationN) {
    throw std::length_error("enumeration supports 2 <= n <= " +
                            std::to_string(kMaxEnumerationN) + ", got " +
                            std::to_string(n));
  }
  const std::uint64_t count = outcome_count(n, params.m());
  if (count > kEnumerationGuard) {
    throw std::length_error("enumeration guard exceeded: more than " +
                            std::to_string(kEnumerationGuard) + " outcomes");
  }
  ExactDistribution dist;
  dist.n = n;
  dist.params = params;
  dist.outcomes.reserve(count);
  Enumerator(n, params, dist).run();
  return dist;
}

std::uint64_t outcome_id(const PAGraph& g) {
  std::uint64_t id = 0;
  const auto m = static_cast<std::size_t>(g.params().m());
  const auto edges = g.edges();
  for (std::size_t k = m; k < edges.size(); ++k) {
    id = id * (edges[k].newer - 1) + (edges[k].target - 1);
  }
  return id;
}

double enumerated_probability(const ExactDistribution& dist,
                              const EdgeEvent& event) {
  check_against(dist, event);
  std::vector<long double> terms;
  for (std::size_t id = 0; id < dist.outcomes.size(); ++id) {
    bool all = true;
    for (const EdgeTriple& e : event.edges()) {
      if (!outcome_contains(dist, id, e)) {
        all = false;
        break;
      }
    }
    if (all) terms.push_back(dist.outcomes[id].probability);
  }
  return static_cast<double>(neumaier_sum(terms));
}

double enumerated_conditional_probability(const ExactDistribution& dist,
                                          const EdgeEvent& given,
                                          const EdgeEvent& hit) {
  check_against(dist, given);
  check_against(dist, hit);
  std::vector<long double> given_terms;
  std::vector<long double> joint_terms;
  for (std::size_t id = 0; id < dist.outcomes.size(); ++id) {
    bool has_given = true;
    for (const EdgeTriple& e : given.edges()) {
      if (!outcome_contains(dist, id, e)) {
        has_given = false;
        break;
      }
    }
    if (!has_given) continue;
    given_terms.push_back(dist.outcomes[id].probability);
    for (const EdgeTriple& e : hit.edges()) {
      if (outcome_contains(dist, id, e)) {
        joint_terms.push_back(dist.outcomes[id].probability);
        break;
      }
    }
  }
  const long double denominator = neumaier_sum(given_terms);
  if (denominator <= 0.0L) {
    throw std::domain_error("conditioning event has probability 0");
  }
  return static_cast<double>(neumaier_sum(joint_terms) / denominator);
}

}  // namespace padiam
