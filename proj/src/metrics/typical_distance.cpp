#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "padiam/asymptotics.hpp"
#include "padiam/metrics.hpp"
#include "padiam/rng.hpp"
#include "parallel.hpp"

namespace padiam {

TypicalDistanceSample typical_distance(const PAGraph& g, std::uint64_t num_pairs,
                                       RngSeed seed, unsigned threads) {
  if (num_pairs < 1) {
    throw std::invalid_argument("typical_distance needs num_pairs >= 1");
  }
  Rng rng(seed.value);
  std::vector<std::pair<Vertex, Vertex>> pairs(num_pairs);
  for (auto& [u, v] : pairs) {
    u = static_cast<Vertex>(1 + rng.uniform_below(g.n()));
    v = static_cast<Vertex>(1 + rng.uniform_below(g.n()));
  }

  TypicalDistanceSample sample;
  sample.distances.resize(num_pairs);
  detail::run_blocks(num_pairs, threads,
                     [&](std::size_t, std::size_t begin, std::size_t end) {
                       BfsWorkspace ws(g);
                       for (std::size_t k = begin; k < end; ++k) {
                         sample.distances[k] =
                             ws.pair_distance(pairs[k].first, pairs[k].second);
                       }
                     });

  std::vector<Distance> sorted = sample.distances;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t count = sorted.size();
  double total = 0.0;
  for (Distance d : sorted) total += d;
  sample.mean = total / static_cast<double>(count);
  sample.median = count % 2 == 1
                      ? sorted[count / 2]
                      : 0.5 * (sorted[count / 2 - 1] + sorted[count / 2]);
  const auto p90_rank = static_cast<std::size_t>(std::ceil(0.9 * count));
  sample.p90 = sorted[std::max<std::size_t>(p90_rank, 1) - 1];

  // Normal approximation to the Binomial(count, 1/2) order statistics.
  const double half_width = 1.959963984540054 * std::sqrt(count) / 2.0;
  const double low_rank = std::floor(count / 2.0 - half_width);
  const double high_rank = std::ceil(count / 2.0 + 1.0 + half_width);
  sample.median_ci_low =
      sorted[static_cast<std::size_t>(std::clamp(low_rank, 1.0, double(count))) - 1];
  sample.median_ci_high =
      sorted[static_cast<std::size_t>(std::clamp(high_rank, 1.0, double(count))) - 1];
  return sample;
}

DistanceReport distance_report(const PAGraph& g, std::uint64_t num_pairs,
                               RngSeed pair_seed, bool with_diameter,
                               unsigned threads) {
  DistanceReport report;
  report.n = g.n();
  report.params = g.params();
  report.seed = g.seed();
  if (with_diameter) report.diameter = diameter_exact(g);

  const TypicalDistanceSample sample =
      typical_distance(g, num_pairs, pair_seed, threads);
  report.typical_samples = num_pairs;
  report.typical_mean = sample.mean;
  report.typical_median = sample.median;
  report.typical_p90 = sample.p90;

  if (classify_regime(g.params()) == Regime::kPositiveDelta) {
    const double scale = log_nu(g.n(), g.params());
    if (report.diameter) report.ratio_diameter = *report.diameter / scale;
    report.ratio_mean = report.typical_mean / scale;
    report.ratio_median = report.typical_median / scale;
    report.ratio_p90 = report.typical_p90 / scale;
  }
  return report;
}

}  // namespace padiam
