#include "padiam/generator.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "padiam/rng.hpp"

namespace padiam {

namespace {

// Fenwick tree over integer degrees with an implicit +delta per vertex, so
// the weight of a label range (a, b] is sum(D) + (b - a) * delta. The degree
// part stays exact; only the delta part is floating.
class AffineWeightTree {
 public:
  explicit AffineWeightTree(std::size_t size, double delta)
      : tree_(size + 1, 0),
        top_bit_(std::bit_floor(size == 0 ? std::size_t{1} : size)),
        delta_(delta) {}

  void add(Vertex v, std::int64_t amount) {
    for (std::size_t i = v; i < tree_.size(); i += i & (~i + 1)) {
      tree_[i] += amount;
    }
  }

  // Smallest label k <= limit whose prefix weight exceeds u.
  Vertex find(double u, Vertex limit) const {
    std::size_t pos = 0;
    for (std::size_t step = top_bit_; step > 0; step >>= 1) {
      const std::size_t next = pos + step;
      if (next > limit) continue;
      const double w = static_cast<double>(tree_[next]) +
                       static_cast<double>(step) * delta_;
      if (w <= u) {
        pos = next;
        u -= w;
      }
    }
    const auto k = static_cast<Vertex>(pos + 1);
    return k > limit ? limit : k;
  }

 private:
  std::vector<std::int64_t> tree_;
  std::size_t top_bit_;
  double delta_;
};

std::vector<EdgeTriple> initial_edges(std::uint32_t m,
                                      std::size_t capacity) {
  std::vector<EdgeTriple> edges;
  edges.reserve(capacity);
  for (std::uint32_t i = 1; i <= m; ++i) edges.push_back({2, i, 1});
  return edges;
}

// delta >= 0: mixture of a degree-proportional draw (uniform entry of the
// endpoint array) and a uniform draw over the t-1 candidates.
std::vector<EdgeTriple> sample_mixture(std::uint32_t n, std::uint32_t m,
                                       double delta, Rng& rng) {
  const std::size_t total_edges = std::size_t{m} * (n - 1);
  std::vector<EdgeTriple> edges = initial_edges(m, total_edges);
  std::vector<Vertex> endpoints;
  endpoints.reserve(2 * total_edges);
  for (std::uint32_t i = 1; i <= m; ++i) {
    endpoints.push_back(1);
    endpoints.push_back(2);
  }

  for (Vertex t = 3; t <= n; ++t) {
    const double uniform_mass = static_cast<double>(t - 1) * delta;
    for (std::uint32_t i = 1; i <= m; ++i) {
      // endpoints.size() == 2m(t-2) + (i-1): v_t's own endpoints are
      // appended only after the step completes.
      const std::uint64_t degree_mass = endpoints.size();
      Vertex target;
      if (delta == 0.0 ||
          rng.uniform01() * (static_cast<double>(degree_mass) +
                             uniform_mass) <
              static_cast<double>(degree_mass)) {
        target = endpoints[rng.uniform_below(degree_mass)];
      } else {
        target = static_cast<Vertex>(1 + rng.uniform_below(t - 1));
      }
      edges.push_back({t, i, target});
      endpoints.push_back(target);
    }
    for (std::uint32_t i = 0; i < m; ++i) endpoints.push_back(t);
  }
  return edges;
}

// delta < 0: inverse CDF over the Fenwick tree of D_v + delta.
std::vector<EdgeTriple> sample_fenwick(std::uint32_t n, std::uint32_t m,
                                       double delta, Rng& rng) {
  const std::size_t total_edges = std::size_t{m} * (n - 1);
  std::vector<EdgeTriple> edges = initial_edges(m, total_edges);
  AffineWeightTree weights(n, delta);
  weights.add(1, m);
  weights.add(2, m);

  for (Vertex t = 3; t <= n; ++t) {
    for (std::uint32_t i = 1; i <= m; ++i) {
      const double total = 2.0 * m * (t - 2) + (i - 1) +
                           static_cast<double>(t - 1) * delta;
      const Vertex target = weights.find(rng.uniform01() * total, t - 1);
      edges.push_back({t, i, target});
      weights.add(target, 1);
    }
    weights.add(t, m);
  }
  return edges;
}

}  // namespace

PAGraph generate(std::int64_t n, const Params& params, RngSeed seed) {
  if (n < 2) {
    throw std::invalid_argument("generate requires n >= 2, got " +
                                std::to_string(n));
  }
  if (n > static_cast<std::int64_t>(UINT32_MAX) - 1) {
    throw std::invalid_argument("n too large: " + std::to_string(n));
  }
  const auto size = static_cast<std::uint32_t>(n);
  const auto m = static_cast<std::uint32_t>(params.m());
  Rng rng(seed.value);
  std::vector<EdgeTriple> edges = params.delta() >= 0.0
                                      ? sample_mixture(size, m, params.delta(), rng)
                                      : sample_fenwick(size, m, params.delta(), rng);
  return PAGraph(size, params, seed, std::move(edges));
}

}  // namespace padiam
