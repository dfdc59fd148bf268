#include "chebstab/matching.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace chebstab {

namespace {
constexpr std::size_t kInfLayer = std::numeric_limits<std::size_t>::max();
}

BipartiteMatcher::BipartiteMatcher(std::size_t num_left, std::size_t num_right)
    : num_left_(num_left),
      num_right_(num_right),
      adj_(num_left),
      mate_left_(num_left, npos),
      mate_right_(num_right, npos),
      layer_(num_left, kInfLayer) {}

void BipartiteMatcher::add_edge(std::size_t left, std::size_t right) {
  if (left >= num_left_ || right >= num_right_) {
    throw std::out_of_range("bipartite edge endpoint out of range");
  }
  adj_[left].push_back(right);
}

// Layers free left vertices at 0 and reports whether some augmenting path
// reaches a free right vertex.
bool BipartiteMatcher::bfs() {
  std::queue<std::size_t> queue;
  for (std::size_t u = 0; u < num_left_; ++u) {
    if (mate_left_[u] == npos) {
      layer_[u] = 0;
      queue.push(u);
    } else {
      layer_[u] = kInfLayer;
    }
  }
  bool found = false;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop();
    for (std::size_t v : adj_[u]) {
      const std::size_t w = mate_right_[v];
      if (w == npos) {
        found = true;
      } else if (layer_[w] == kInfLayer) {
        layer_[w] = layer_[u] + 1;
        queue.push(w);
      }
    }
  }
  return found;
}

bool BipartiteMatcher::dfs(std::size_t u) {
  for (std::size_t v : adj_[u]) {
    const std::size_t w = mate_right_[v];
    if (w == npos || (layer_[w] == layer_[u] + 1 && dfs(w))) {
      mate_left_[u] = v;
      mate_right_[v] = u;
      return true;
    }
  }
  layer_[u] = kInfLayer;
  return false;
}

std::size_t BipartiteMatcher::solve() {
  std::size_t size = 0;
  for (std::size_t u = 0; u < num_left_; ++u) {
    if (mate_left_[u] != npos) ++size;
  }
  while (bfs()) {
    for (std::size_t u = 0; u < num_left_; ++u) {
      if (mate_left_[u] == npos && dfs(u)) ++size;
    }
  }
  return size;
}

}  // namespace chebstab
