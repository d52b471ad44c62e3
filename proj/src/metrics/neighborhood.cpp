#include <algorithm>
#include <stdexcept>
#include <vector>

#include "padiam/metrics.hpp"
#include "parallel.hpp"

namespace padiam {

namespace {

void check_radius(Distance radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
}

template <typename Expand>
std::vector<std::uint64_t> shells(const PAGraph& g, Vertex v, Distance radius,
                                  Expand&& expand) {
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> frontier{v};
  std::vector<Vertex> next;
  seen[v - 1] = 1;
  std::vector<std::uint64_t> sizes{1};
  for (Distance r = 1; r <= radius; ++r) {
    next.clear();
    for (Vertex x : frontier) {
      expand(x, [&](Vertex y) {
        if (!seen[y - 1]) {
          seen[y - 1] = 1;
          next.push_back(y);
        }
      });
    }
    sizes.push_back(next.size());
    frontier.swap(next);
  }
  return sizes;
}

std::vector<std::uint64_t> running_total(const std::vector<std::uint64_t>& xs) {
  std::vector<std::uint64_t> out(xs.size());
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) out[k] = total += xs[k];
  return out;
}

}  // namespace

GrowthProfile neighborhood_profile(const PAGraph& g, Vertex v, Distance radius) {
  g.check_vertex(v);
  check_radius(radius);
  GrowthProfile profile;
  profile.vertex = v;
  profile.shell_sizes = shells(g, v, radius, [&](Vertex x, auto&& visit) {
    for (Vertex y : g.neighbors(x)) visit(y);
  });
  profile.ascendant_shell_sizes =
      shells(g, v, radius, [&](Vertex x, auto&& visit) {
        for (const EdgeTriple& e : g.out_edges(x)) visit(e.target);
      });
  profile.cumulative = running_total(profile.shell_sizes);
  profile.ascendant_cumulative = running_total(profile.ascendant_shell_sizes);
  return profile;
}

// Smallest r <= radius with |N_r(v)| >= threshold, or -1.
static Distance radius_to_reach(const PAGraph& g, Vertex v, Distance radius,
                         std::uint64_t threshold) {
  BfsWorkspace ws(g);
  for (Distance r = 0; r <= radius; ++r) {
    if (ws.ball_size(v, r, threshold) >= threshold) return r;
  }
  return -1;
}

MinNeighborhood min_neighborhood_size(const PAGraph& g, Distance radius,
                                      std::uint64_t threshold, unsigned threads) {
  check_radius(radius);

  // If N_r(w) already holds `threshold` vertices then so does N_radius(v)
  // for every v with dist(v, w) <= radius - r. A few high-degree hubs
  // usually settle almost every vertex this way; the rest get a direct BFS.
  constexpr std::size_t kHubs = 8;
  std::vector<Vertex> order(g.n());
  for (Vertex v = 1; v <= g.n(); ++v) order[v - 1] = v;
  const std::size_t hubs = std::min(kHubs, order.size());
  std::partial_sort(order.begin(), order.begin() + hubs, order.end(),
                    [&](Vertex a, Vertex b) {
                      const auto da = g.degree(a), db = g.degree(b);
                      return da != db ? da > db : a < b;
                    });

  // slack[v] = radius - min over hubs (dist(v, hub) + r(hub)), settled in
  // decreasing slack order.
  std::vector<Distance> slack(g.n(), -1);
  std::vector<std::vector<Vertex>> buckets(radius + 1);
  for (std::size_t k = 0; k < hubs; ++k) {
    const Distance r = radius_to_reach(g, order[k], radius, threshold);
    if (r >= 0) buckets[radius - r].push_back(order[k]);
  }
  for (Distance s = radius; s >= 0; --s) {
    for (std::size_t k = 0; k < buckets[s].size(); ++k) {
      const Vertex x = buckets[s][k];
      if (slack[x - 1] >= s) continue;
      slack[x - 1] = s;
      if (s == 0) continue;
      for (Vertex y : g.neighbors(x)) {
        if (slack[y - 1] < s - 1) buckets[s - 1].push_back(y);
      }
    }
    buckets[s].clear();
    buckets[s].shrink_to_fit();
  }

  std::vector<Vertex> open;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (slack[v - 1] < 0) open.push_back(v);
  }
  MinNeighborhood result{UINT64_MAX, 0};
  if (open.size() < g.n()) {
    // Some vertex is certified; the smallest certified label attains
    // `threshold` unless a direct BFS finds something smaller.
    for (Vertex v = 1; v <= g.n(); ++v) {
      if (slack[v - 1] >= 0) {
        result = {threshold, v};
        break;
      }
    }
  }

  std::vector<MinNeighborhood> per_block(std::max(1u, threads));
  detail::run_blocks(open.size(), threads,
                     [&](std::size_t block, std::size_t begin, std::size_t end) {
                       BfsWorkspace ws(g);
                       MinNeighborhood best{UINT64_MAX, 0};
                       for (std::size_t k = begin; k < end; ++k) {
                         const Vertex v = open[k];
                         const std::uint64_t size = ws.ball_size(v, radius, threshold);
                         if (size < best.size) best = {size, v};
                       }
                       per_block[block] = best;
                     });
  for (const MinNeighborhood& b : per_block) {
    if (b.vertex == 0) continue;
    if (b.size < result.size || (b.size == result.size && b.vertex < result.vertex)) {
      result = b;
    }
  }
  return result;
}

Distance distance_to_old_set(const PAGraph& g, Vertex v, Vertex cutoff) {
  g.check_vertex(v);
  g.check_vertex(cutoff);
  if (v <= cutoff) return 0;
  std::vector<Distance> dist(g.n(), kUnreached);
  std::vector<Vertex> queue{v};
  dist[v - 1] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y - 1] != kUnreached) continue;
      dist[y - 1] = dist[x - 1] + 1;
      if (y <= cutoff) return dist[y - 1];
      queue.push_back(y);
    }
  }
  return kUnreached;
}

std::vector<Distance> distances_to_old_set(const PAGraph& g, Vertex cutoff) {
  g.check_vertex(cutoff);
  std::vector<Distance> dist(g.n(), kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  for (Vertex v = 1; v <= cutoff; ++v) {
    dist[v - 1] = 0;
    queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y - 1] == kUnreached) {
        dist[y - 1] = dist[x - 1] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace padiam
