#include "padiam/graph.hpp"

#include <stdexcept>
#include <string>

namespace padiam {

namespace {

std::string describe(const EdgeTriple& e) {
  return "(" + std::to_string(e.newer) + ", " + std::to_string(e.slot) +
         ", " + std::to_string(e.target) + ")";
}

}  // namespace

PAGraph::PAGraph(std::uint32_t n, Params params, RngSeed seed,
                 std::vector<EdgeTriple> edges)
    : n_(n), params_(params), seed_(seed), edges_(std::move(edges)) {
  if (n_ < 2) {
    throw std::invalid_argument("graph needs n >= 2, got " +
                                std::to_string(n_));
  }
  const auto m = static_cast<std::uint64_t>(params_.m());
  const std::uint64_t expected = m * (n_ - 1);
  if (edges_.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) +
                                " edges, got " +
                                std::to_string(edges_.size()));
  }
  if (2 * expected > UINT32_MAX) {
    throw std::invalid_argument("graph too large for 32-bit adjacency");
  }

  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const EdgeTriple& e = edges_[k];
    const auto want_newer = static_cast<Vertex>(2 + k / m);
    const auto want_slot = static_cast<std::uint32_t>(1 + k % m);
    if (e.newer != want_newer || e.slot != want_slot) {
      throw std::invalid_argument("edge " + std::to_string(k) + " is " +
                                  describe(e) + ", expected newer " +
                                  std::to_string(want_newer) + " slot " +
                                  std::to_string(want_slot));
    }
    if (e.target < 1 || e.target >= e.newer) {
      throw std::invalid_argument("edge " + describe(e) +
                                  " does not point to an older vertex");
    }
    ++offsets_[e.newer];
    ++offsets_[e.target];
  }
  // Prefix sums: offsets_[v] becomes the end of v's range (label v).
  for (std::size_t v = 1; v <= n_; ++v) offsets_[v] += offsets_[v - 1];

  neighbors_.resize(offsets_[n_]);
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const EdgeTriple& e : edges_) {
    neighbors_[cursor[e.newer - 1]++] = e.target;
    neighbors_[cursor[e.target - 1]++] = e.newer;
  }
}

std::span<const EdgeTriple> PAGraph::out_edges(Vertex v) const {
  check_vertex(v);
  if (v == 1) return {};
  const auto m = static_cast<std::size_t>(params_.m());
  return std::span<const EdgeTriple>(edges_).subspan((v - 2) * m, m);
}

std::uint64_t PAGraph::degree(Vertex v) const {
  check_vertex(v);
  return offsets_[v] - offsets_[v - 1];
}

void PAGraph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw std::out_of_range("vertex label " + std::to_string(v) +
                            " outside [1, " + std::to_string(n_) + "]");
  }
}

std::uint64_t degree(const PAGraph& g, Vertex v) { return g.degree(v); }

}  // namespace padiam
