#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "padiam/params.hpp"

namespace padiam {

/// One attachment edge: slot `slot` of vertex `newer` lands on `target`.
/// A well-formed edge has target < newer.
struct EdgeTriple {
  Vertex newer = 0;
  std::uint32_t slot = 0;
  Vertex target = 0;

  auto operator<=>(const EdgeTriple&) const = default;
};

/// Immutable preferential attachment multigraph on labels 1..n.
///
/// Edges are kept in generation order: the m initial edges (2, i, 1) first,
/// then m edges per vertex t = 3..n. Adjacency is frozen into an
/// offset-plus-neighbor layout; parallel edges appear as repeated neighbors.
class PAGraph {
 public:
  /// Validates the triple sequence against the growth structure (exactly m
  /// slots per vertex >= 2 in order, targets strictly older, initial edges
  /// joining v_1 and v_2) and builds adjacency. Throws std::invalid_argument.
  PAGraph(std::uint32_t n, Params params, RngSeed seed,
          std::vector<EdgeTriple> edges);

  std::uint32_t n() const { return n_; }
  const Params& params() const { return params_; }
  RngSeed seed() const { return seed_; }

  std::span<const EdgeTriple> edges() const { return edges_; }

  /// The m attachment edges of v (empty for v_1).
  std::span<const EdgeTriple> out_edges(Vertex v) const;

  /// Neighbor labels of v, multiplicity preserved.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v - 1],
            neighbors_.data() + offsets_[v]};
  }

  /// D_v(n): multiplicity-counted degree. Throws std::out_of_range.
  std::uint64_t degree(Vertex v) const;

  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  /// Throws std::out_of_range unless 1 <= v <= n.
  void check_vertex(Vertex v) const;

  bool operator==(const PAGraph& other) const {
    return n_ == other.n_ && params_ == other.params_ &&
           seed_ == other.seed_ && edges_ == other.edges_;
  }

 private:
  std::uint32_t n_;
  Params params_;
  RngSeed seed_;
  std::vector<EdgeTriple> edges_;
  std::vector<std::uint64_t> offsets_;  // size n + 1
  std::vector<Vertex> neighbors_;
};

/// Free-function form of PAGraph::degree.
std::uint64_t degree(const PAGraph& g, Vertex v);

}  // namespace padiam
