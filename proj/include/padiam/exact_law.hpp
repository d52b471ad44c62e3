#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "padiam/graph.hpp"
#include "padiam/params.hpp"

namespace padiam {

/// A set of potential edges. Duplicates are removed and triples are kept
/// sorted. Ill-formed triples (target >= newer, conflicting slots) are
/// allowed; they simply make the event impossible.
class EdgeEvent {
 public:
  EdgeEvent() = default;
  explicit EdgeEvent(std::vector<EdgeTriple> edges);
  EdgeEvent(std::initializer_list<EdgeTriple> edges)
      : EdgeEvent(std::vector<EdgeTriple>(edges)) {}

  std::span<const EdgeTriple> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const EdgeTriple& e) const;

  /// True when two triples share (newer, slot) with different targets, or a
  /// triple points to a vertex that is not strictly older.
  bool structurally_impossible() const;

  EdgeEvent united(const EdgeEvent& other) const;
  bool disjoint_from(const EdgeEvent& other) const;

  /// Smallest vertex label touched by the event (0 when empty).
  Vertex min_vertex() const;

 private:
  std::vector<EdgeTriple> edges_;
};

/// p_s: number of triples with target s; q_s: number of triples spanning s
/// (target < s < newer).
struct ShellCounts {
  std::map<Vertex, std::uint32_t> p;
  std::map<Vertex, std::uint32_t> q;
};

ShellCounts shell_counts(const EdgeEvent& event);

/// (x)_r = x (x-1) ... (x-r+1), (x)_0 = 1.
double falling_factorial(double x, std::uint32_t r);

struct EventProbability {
  double probability = 0.0;
  double log_probability = 0.0;  // -inf when probability is 0
};

/// P[E subset of E(G_n)] via the product over s = 2..n of
///   (m+d+p_s-1)_{p_s} ((2s-3)m+(s-1)d+q_s-1)_{q_s}
///     / ((2s-2)m+sd+p_s+q_s-1)_{p_s+q_s}.
/// Structurally impossible events give 0. Throws std::invalid_argument for
/// triples with newer > n, slot outside [1, m], or a zero label.
EventProbability edge_set_probability_detailed(const EdgeEvent& event,
                                               std::uint32_t n,
                                               const Params& params);

double edge_set_probability(const EdgeEvent& event, std::uint32_t n,
                            const Params& params);

/// Every complete attachment history of G_n with its exact probability.
struct ExactDistribution {
  struct Outcome {
    std::vector<Vertex> targets;  // edge (t, i) for t = 3..n, i = 1..m
    double probability = 0.0;
  };

  std::uint32_t n = 0;
  Params params;
  std::vector<Outcome> outcomes;  // outcome id == index (mixed radix)

  /// Edge triples of an outcome, including the initial (2, i, 1) edges.
  std::vector<EdgeTriple> edge_sequence(std::size_t outcome_id) const;
};

/// Largest admissible outcome count for enumerate_distribution.
inline constexpr std::uint64_t kEnumerationGuard = 1'000'000;

/// prod_{t=3}^{n} (t-1)^m, saturating above the guard.
std::uint64_t outcome_count(std::uint32_t n, int m);

/// Enumerates by multiplying sequential attachment conditionals. Requires
/// n <= 6 and outcome_count <= kEnumerationGuard; throws std::length_error
/// otherwise.
ExactDistribution enumerate_distribution(std::uint32_t n, const Params& params);

/// Mixed-radix id of a realized graph's attachment history; matches the
/// index into ExactDistribution::outcomes.
std::uint64_t outcome_id(const PAGraph& g);

/// Marginal of an event computed from the enumeration (oracle route).
double enumerated_probability(const ExactDistribution& dist,
                              const EdgeEvent& event);

/// P[E' meets E(G_n) | E subset of E(G_n)] by inclusion-exclusion over
/// subsets of E'. Throws std::invalid_argument unless E and E' are disjoint
/// and |E'| <= kInclusionExclusionLimit; std::domain_error when P[E] = 0.
inline constexpr std::size_t kInclusionExclusionLimit = 12;
double conditional_probability(const EdgeEvent& given, const EdgeEvent& hit,
                               std::uint32_t n, const Params& params);

/// Same quantity read off the enumeration (oracle route).
double enumerated_conditional_probability(const ExactDistribution& dist,
                                          const EdgeEvent& given,
                                          const EdgeEvent& hit);

/// (|E'|(m+d+1) + |E|) / ((2s-2)m + s d), valid when V(E') lies in [s, n].
double bound_conditional(std::size_t size_given, std::size_t size_hit,
                         std::uint32_t s, const Params& params);

}  // namespace padiam
