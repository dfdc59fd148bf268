#pragma once

#include <cstddef>
#include <vector>

namespace chebstab {

// Maximum-cardinality matching in a bipartite graph (Hopcroft-Karp).
// Left vertices are 0..num_left-1, right vertices 0..num_right-1.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t num_left, std::size_t num_right);

  void add_edge(std::size_t left, std::size_t right);

  // Runs the phases to completion and returns the matching size.
  std::size_t solve();

  // Right vertex matched to `left`, or npos.
  std::size_t mate_of_left(std::size_t left) const { return mate_left_[left]; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  bool bfs();
  bool dfs(std::size_t left);

  std::size_t num_left_;
  std::size_t num_right_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> mate_left_;
  std::vector<std::size_t> mate_right_;
  std::vector<std::size_t> layer_;
};

}  // namespace chebstab
