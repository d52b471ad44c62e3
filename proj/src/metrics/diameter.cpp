#include <algorithm>
#include <limits>
#include <span>
#include <vector>

#include "padiam/metrics.hpp"
#include "padiam/rng.hpp"

namespace padiam {

namespace {

Vertex highest_degree_vertex(const PAGraph& g) {
  Vertex best = 1;
  for (Vertex v = 2; v <= g.n(); ++v) {
    if (g.neighbors(v).size() > g.neighbors(best).size()) best = v;
  }
  return best;
}

// Per-vertex eccentricity bounds. A BFS from x with eccentricity e gives,
// for every w at distance d: max(d, e - d) <= ecc(w) <= e + d.
class EccentricityBounds {
 public:
  explicit EccentricityBounds(const PAGraph& g)
      : ws_(g), upper_(g.n(), std::numeric_limits<Distance>::max()) {}

  std::span<const Distance> sweep_from(Vertex x) {
    const auto dist = ws_.run(x);
    const Distance e = ws_.eccentricity();
    ++runs_;
    best_lower_ = std::max(best_lower_, e);
    for (std::size_t w = 0; w < dist.size(); ++w) {
      upper_[w] = std::min(upper_[w], e + dist[w]);
    }
    return dist;
  }

  Vertex last_farthest() const { return ws_.farthest(); }
  Distance upper(Vertex v) const { return upper_[v - 1]; }
  Distance best_lower() const { return best_lower_; }
  std::uint32_t runs() const { return runs_; }

 private:
  BfsWorkspace ws_;
  std::vector<Distance> upper_;
  Distance best_lower_ = 0;
  std::uint32_t runs_ = 0;
};

}  // namespace

// iFUB: BFS levels around a hub, scanned from the outside in. Once the
// levels <= i remain, any pair among them is within 2i of each other, so a
// lower bound >= 2i is the diameter. Vertices whose upper bound cannot
// beat the current lower bound are skipped.
DiameterResult diameter_exact_detailed(const PAGraph& g) {
  EccentricityBounds bounds(g);
  const Vertex hub = highest_degree_vertex(g);
  std::vector<std::vector<Vertex>> levels;
  {
    const auto dist = bounds.sweep_from(hub);
    for (std::size_t w = 0; w < dist.size(); ++w) {
      if (static_cast<std::size_t>(dist[w]) >= levels.size()) levels.resize(dist[w] + 1);
      levels[dist[w]].push_back(static_cast<Vertex>(w + 1));
    }
  }
  bounds.sweep_from(bounds.last_farthest());

  for (Distance i = static_cast<Distance>(levels.size()) - 1; i >= 1; --i) {
    if (bounds.best_lower() >= 2 * i) break;
    for (Vertex v : levels[i]) {
      if (bounds.upper(v) > bounds.best_lower()) bounds.sweep_from(v);
    }
  }
  return {bounds.best_lower(), bounds.runs()};
}

Distance diameter_exact(const PAGraph& g) {
  return diameter_exact_detailed(g).diameter;
}

Distance diameter_lower_bound(const PAGraph& g, std::uint32_t extra_sources,
                              RngSeed seed) {
  BfsWorkspace ws(g);
  ws.run(highest_degree_vertex(g));
  Distance best = ws.eccentricity();
  ws.run(ws.farthest());
  best = std::max(best, ws.eccentricity());
  Rng rng(seed.value);
  for (std::uint32_t k = 0; k < extra_sources; ++k) {
    ws.run(static_cast<Vertex>(1 + rng.uniform_below(g.n())));
    best = std::max(best, ws.eccentricity());
    ws.run(ws.farthest());
    best = std::max(best, ws.eccentricity());
  }
  return best;
}

}  // namespace padiam
