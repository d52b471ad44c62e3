#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "padiam/graph.hpp"
#include "padiam/params.hpp"

namespace padiam {

/// Hop distance. Distances are simple-graph hop counts: parallel edges count
/// once.
using Distance = std::int32_t;
inline constexpr Distance kUnreached = -1;

/// Reusable BFS workspace bound to one graph. Not thread-safe; use one per
/// thread.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(const PAGraph& g);

  /// Full BFS from `source`. Returns distances indexed by label - 1.
  std::span<const Distance> run(Vertex source);

  /// Eccentricity and a farthest vertex (smallest label among ties) of the
  /// last run().
  Distance eccentricity() const { return eccentricity_; }
  Vertex farthest() const { return farthest_; }

  /// Exact dist(u, v) by bidirectional level-synchronous BFS.
  Distance pair_distance(Vertex u, Vertex v);

  /// |{w : dist(source, w) <= radius}|, stopping as soon as the count
  /// reaches `cap` (then returns cap).
  std::uint64_t ball_size(Vertex source, Distance radius, std::uint64_t cap);

 private:
  bool mark(std::vector<std::uint32_t>& stamps, Vertex v);
  void next_epoch();

  const PAGraph& g_;
  std::vector<Distance> dist_;
  std::vector<Vertex> queue_;
  Distance eccentricity_ = 0;
  Vertex farthest_ = 0;

  std::vector<std::uint32_t> seen_a_;
  std::vector<std::uint32_t> seen_b_;
  std::vector<Distance> level_a_;
  std::vector<Distance> level_b_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> frontier_a_;
  std::vector<Vertex> frontier_b_;
  std::vector<Vertex> next_;
};

/// Hop distances from `source` to all vertices (index label - 1). Throws
/// std::out_of_range for an invalid label.
std::vector<Distance> bfs(const PAGraph& g, Vertex source);

/// Exact diameter by eccentricity-bound pruning seeded with a double sweep.
Distance diameter_exact(const PAGraph& g);

/// Diameter plus the number of BFS runs it took.
struct DiameterResult {
  Distance diameter = 0;
  std::uint32_t bfs_runs = 0;
};
DiameterResult diameter_exact_detailed(const PAGraph& g);

/// Max eccentricity over a double sweep plus `extra_sources` random BFS
/// roots: a lower bound on the diameter.
Distance diameter_lower_bound(const PAGraph& g, std::uint32_t extra_sources,
                              RngSeed seed);

struct TypicalDistanceSample {
  std::vector<Distance> distances;  // in sampling order
  double mean = 0.0;
  double median = 0.0;
  Distance p90 = 0;
  // Order-statistic 95% confidence interval for the median.
  Distance median_ci_low = 0;
  Distance median_ci_high = 0;
};

/// dist(u, v) for `num_pairs` independent uniform ordered pairs, sampled
/// with replacement (u == v allowed). Throws std::invalid_argument when
/// num_pairs < 1. Pair distances are computed on up to `threads` threads;
/// results do not depend on the thread count.
TypicalDistanceSample typical_distance(const PAGraph& g, std::uint64_t num_pairs,
                                       RngSeed seed, unsigned threads = 1);

/// Full and ascendant BFS shells around one vertex.
struct GrowthProfile {
  Vertex vertex = 0;
  std::vector<std::uint64_t> shell_sizes;            // |S_r| of the full BFS
  std::vector<std::uint64_t> cumulative;             // |N_r(v)|
  std::vector<std::uint64_t> ascendant_shell_sizes;  // |N_r^down \ N_{r-1}^down|
  std::vector<std::uint64_t> ascendant_cumulative;   // |N_r^down(v)|
};

/// Shells for r = 0..radius. The ascendant BFS follows only attachment
/// edges from a vertex to its strictly older targets.
GrowthProfile neighborhood_profile(const PAGraph& g, Vertex v, Distance radius);

struct MinNeighborhood {
  std::uint64_t size = 0;
  Vertex vertex = 0;  // smallest label attaining the minimum
};

/// min over v of min(|N_radius(v)|, threshold).
MinNeighborhood min_neighborhood_size(const PAGraph& g, Distance radius,
                                      std::uint64_t threshold,
                                      unsigned threads = 1);

/// dist(v, [1, cutoff]); 0 when v <= cutoff.
Distance distance_to_old_set(const PAGraph& g, Vertex v, Vertex cutoff);

/// dist(v, [1, cutoff]) for every v at once (multi-source BFS), index
/// label - 1.
std::vector<Distance> distances_to_old_set(const PAGraph& g, Vertex cutoff);

/// Summary of one graph's distances.
struct DistanceReport {
  std::uint32_t n = 0;
  Params params;
  RngSeed seed;
  std::optional<Distance> diameter;
  std::uint64_t typical_samples = 0;
  double typical_mean = 0.0;
  double typical_median = 0.0;
  double typical_p90 = 0.0;
  // Each statistic divided by log_nu(n); empty outside the m >= 2, delta > 0
  // regime.
  std::optional<double> ratio_diameter;
  std::optional<double> ratio_mean;
  std::optional<double> ratio_median;
  std::optional<double> ratio_p90;
};

DistanceReport distance_report(const PAGraph& g, std::uint64_t num_pairs,
                               RngSeed pair_seed, bool with_diameter,
                               unsigned threads = 1);

}  // namespace padiam
