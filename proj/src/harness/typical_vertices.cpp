#include <stdexcept>
#include <vector>

#include "padiam/harness.hpp"
#include "padiam/rng.hpp"

namespace padiam {

double typical_vertex_fraction(const PAGraph& g, Distance radius, Vertex cutoff,
                               std::uint32_t sample_vertices, RngSeed seed) {
  if (cutoff < 1 || cutoff > g.n()) {
    throw std::out_of_range("cutoff must lie in [1, n]");
  }
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  if (sample_vertices == 0) return 0.0;

  const std::uint64_t need = g.n() / 10;
  Rng rng(seed.value);
  std::vector<std::uint32_t> stamp(cutoff + 1, 0);
  std::vector<Vertex> frontier, next;
  std::uint32_t typical = 0;

  for (std::uint32_t s = 1; s <= sample_vertices; ++s) {
    const auto root = static_cast<Vertex>(1 + rng.uniform_below(cutoff));
    stamp[root] = s;
    frontier.assign(1, root);
    std::uint64_t reached = 1;
    for (Distance r = 0; r < radius && reached < need && !frontier.empty(); ++r) {
      next.clear();
      for (Vertex u : frontier) {
        for (Vertex w : g.neighbors(u)) {
          if (w <= cutoff && stamp[w] != s) {
            stamp[w] = s;
            next.push_back(w);
          }
        }
      }
      reached += next.size();
      frontier.swap(next);
    }
    if (reached >= need) ++typical;
  }
  return static_cast<double>(typical) / sample_vertices;
}

}  // namespace padiam
