#include <algorithm>
#include <iterator>

#include "padiam/exact_law.hpp"

namespace padiam {

EdgeEvent::EdgeEvent(std::vector<EdgeTriple> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeEvent::contains(const EdgeTriple& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool EdgeEvent::structurally_impossible() const {
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (edges_[k].target >= edges_[k].newer) return true;
    // Sorted order puts equal (newer, slot) pairs next to each other.
    if (k > 0 && edges_[k].newer == edges_[k - 1].newer &&
        edges_[k].slot == edges_[k - 1].slot) {
      return true;
    }
  }
  return false;
}

EdgeEvent EdgeEvent::united(const EdgeEvent& other) const {
  std::vector<EdgeTriple> all;
  all.reserve(edges_.size() + other.edges_.size());
  std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(),
                 other.edges_.end(), std::back_inserter(all));
  return EdgeEvent(std::move(all));
}

bool EdgeEvent::disjoint_from(const EdgeEvent& other) const {
  return std::none_of(other.edges_.begin(), other.edges_.end(),
                      [this](const EdgeTriple& e) { return contains(e); });
}

Vertex EdgeEvent::min_vertex() const {
  Vertex lowest = 0;
  for (const EdgeTriple& e : edges_) {
    const Vertex v = std::min(e.newer, e.target);
    if (lowest == 0 || v < lowest) lowest = v;
  }
  return lowest;
}

ShellCounts shell_counts(const EdgeEvent& event) {
  ShellCounts counts;
  for (const EdgeTriple& e : event.edges()) {
    ++counts.p[e.target];
    for (Vertex s = e.target + 1; s < e.newer; ++s) ++counts.q[s];
  }
  return counts;
}

}  // namespace padiam
