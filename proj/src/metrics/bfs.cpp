#include <algorithm>
#include <limits>

#include "padiam/metrics.hpp"

namespace padiam {

BfsWorkspace::BfsWorkspace(const PAGraph& g)
    : g_(g),
      dist_(g.n(), kUnreached),
      seen_a_(g.n(), 0),
      seen_b_(g.n(), 0),
      level_a_(g.n(), 0),
      level_b_(g.n(), 0) {
  queue_.reserve(g.n());
}

std::span<const Distance> BfsWorkspace::run(Vertex source) {
  g_.check_vertex(source);
  std::fill(dist_.begin(), dist_.end(), kUnreached);
  queue_.clear();
  queue_.push_back(source);
  dist_[source - 1] = 0;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Vertex x = queue_[head];
    const Distance next = dist_[x - 1] + 1;
    for (Vertex y : g_.neighbors(x)) {
      if (dist_[y - 1] == kUnreached) {
        dist_[y - 1] = next;
        queue_.push_back(y);
      }
    }
  }
  // Queue order is nondecreasing in distance; pick the smallest label at
  // the last level.
  eccentricity_ = dist_[queue_.back() - 1];
  farthest_ = queue_.back();
  for (auto it = queue_.rbegin();
       it != queue_.rend() && dist_[*it - 1] == eccentricity_; ++it) {
    farthest_ = std::min(farthest_, *it);
  }
  return dist_;
}

void BfsWorkspace::next_epoch() {
  if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(seen_a_.begin(), seen_a_.end(), 0);
    std::fill(seen_b_.begin(), seen_b_.end(), 0);
    epoch_ = 0;
  }
  ++epoch_;
}

bool BfsWorkspace::mark(std::vector<std::uint32_t>& stamps, Vertex v) {
  if (stamps[v - 1] == epoch_) return false;
  stamps[v - 1] = epoch_;
  return true;
}

Distance BfsWorkspace::pair_distance(Vertex u, Vertex v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) return 0;
  next_epoch();
  mark(seen_a_, u);
  mark(seen_b_, v);
  level_a_[u - 1] = 0;
  level_b_[v - 1] = 0;
  frontier_a_.assign(1, u);
  frontier_b_.assign(1, v);

  // The two explored balls stay disjoint until the first contact, so the
  // first contact found while expanding a whole level is a shortest path.
  auto volume = [this](const std::vector<Vertex>& frontier) {
    std::uint64_t total = 0;
    for (Vertex x : frontier) total += g_.neighbors(x).size();
    return total;
  };
  while (!frontier_a_.empty() && !frontier_b_.empty()) {
    const bool expand_a = volume(frontier_a_) <= volume(frontier_b_);
    auto& frontier = expand_a ? frontier_a_ : frontier_b_;
    auto& own_seen = expand_a ? seen_a_ : seen_b_;
    auto& own_level = expand_a ? level_a_ : level_b_;
    const auto& other_seen = expand_a ? seen_b_ : seen_a_;
    const auto& other_level = expand_a ? level_b_ : level_a_;
    next_.clear();
    for (Vertex x : frontier) {
      const Distance lx = own_level[x - 1];
      for (Vertex y : g_.neighbors(x)) {
        if (other_seen[y - 1] == epoch_) return lx + 1 + other_level[y - 1];
        if (mark(own_seen, y)) {
          own_level[y - 1] = lx + 1;
          next_.push_back(y);
        }
      }
    }
    frontier.swap(next_);
  }
  return kUnreached;
}

std::uint64_t BfsWorkspace::ball_size(Vertex source, Distance radius,
                                      std::uint64_t cap) {
  g_.check_vertex(source);
  std::uint64_t count = 1;
  if (count >= cap) return cap;
  next_epoch();
  mark(seen_a_, source);
  frontier_a_.assign(1, source);
  for (Distance r = 0; r < radius && !frontier_a_.empty(); ++r) {
    next_.clear();
    for (Vertex x : frontier_a_) {
      for (Vertex y : g_.neighbors(x)) {
        if (mark(seen_a_, y)) {
          if (++count >= cap) return cap;
          next_.push_back(y);
        }
      }
    }
    frontier_a_.swap(next_);
  }
  return count;
}

std::vector<Distance> bfs(const PAGraph& g, Vertex source) {
  BfsWorkspace ws(g);
  const auto dist = ws.run(source);
  return {dist.begin(), dist.end()};
}

}  // namespace padiam
