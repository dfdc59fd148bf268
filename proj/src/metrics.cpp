#include "chebstab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "chebstab/matching.hpp"

namespace chebstab {

Correspondence::Correspondence(
    std::size_t left_size, std::size_t right_size,
    std::vector<std::pair<std::size_t, std::size_t>> pairs)
    : left_size_(left_size), right_size_(right_size), pairs_(std::move(pairs)) {
  std::vector<bool> left_seen(left_size, false);
  std::vector<bool> right_seen(right_size, false);
  for (const auto& [i, j] : pairs_) {
    if (i >= left_size || j >= right_size) {
      throw InputError("correspondence index out of range");
    }
    left_seen[i] = true;
    right_seen[j] = true;
  }
  const auto all = [](const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
  };
  if (!all(left_seen) || !all(right_seen)) {
    throw InputError("correspondence must cover every index on both sides");
  }
}

double directed_hausdorff(const PointCloud& from, const PointCloud& to, Norm norm) {
  require_same_dim(from.dim(), to.dim(), "directed_hausdorff");
  double worst = 0.0;
  for (const Vector& x : from) worst = std::max(worst, point_to_set_dist(x, to, norm));
  return worst;
}

double hausdorff(const PointCloud& m, const PointCloud& w, Norm norm) {
  return std::max(directed_hausdorff(m, w, norm), directed_hausdorff(w, m, norm));
}

double box_hausdorff_linf(const AxisBox& a, const AxisBox& b) {
  require_same_dim(a.dim(), b.dim(), "box_hausdorff_linf");
  double m = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    m = std::max({m, std::abs(a[j].lo - b[j].lo), std::abs(a[j].hi - b[j].hi)});
  }
  return m;
}

double directed_box_hausdorff_linf(const AxisBox& from, const AxisBox& to) {
  require_same_dim(from.dim(), to.dim(), "directed_box_hausdorff_linf");
  double m = 0.0;
  for (std::size_t j = 0; j < from.dim(); ++j) {
    m = std::max({m, to[j].lo - from[j].lo, from[j].hi - to[j].hi});
  }
  return m;
}

namespace {

void require_equal_size(const PointCloud& m, const PointCloud& w,
                        std::string_view what) {
  if (m.size() != w.size()) {
    throw InputError(std::string(what) + ": clouds must have equal size (" +
                     std::to_string(m.size()) + " vs " +
                     std::to_string(w.size()) + ")");
  }
  require_same_dim(m.dim(), w.dim(), what);
}

bool has_perfect_matching(const std::vector<double>& dists, std::size_t n,
                          double threshold) {
  BipartiteMatcher matcher(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (dists[i * n + j] <= threshold) matcher.add_edge(i, j);
    }
  }
  return matcher.solve() == n;
}

}  // namespace

double nnet_dist(const PointCloud& m, const PointCloud& w, Norm norm) {
  require_equal_size(m, w, "nnet_dist");
  const std::size_t n = m.size();
  std::vector<double> dists(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dists[i * n + j] = dist(m[i], w[j], norm);
  }

  std::vector<double> candidates = dists;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // The largest candidate is always feasible (complete graph).
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (has_perfect_matching(dists, n, candidates[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

double nnet_dist_bruteforce(const PointCloud& m, const PointCloud& w, Norm norm) {
  require_equal_size(m, w, "nnet_dist_bruteforce");
  const std::size_t n = m.size();
  if (n > kBruteForceMaxPoints) {
    throw InputError("nnet_dist_bruteforce: refusing N = " + std::to_string(n) +
                     " (limit " + std::to_string(kBruteForceMaxPoints) + ")");
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < n && worst < best; ++i) {
      worst = std::max(worst, dist(m[i], w[perm[i]], norm));
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Correspondence nearest_neighbor_correspondence(const PointCloud& m,
                                               const PointCloud& w, Norm norm) {
  require_same_dim(m.dim(), w.dim(), "nearest_neighbor_correspondence");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(m.size() + w.size());
  const auto nearest = [norm](const Vector& x, const PointCloud& cloud) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < cloud.size(); ++k) {
      const double d = dist(x, cloud[k], norm);
      if (d < best_d) {
        best_d = d;
        best = k;
      }
    }
    return best;
  };
  for (std::size_t i = 0; i < m.size(); ++i) pairs.emplace_back(i, nearest(m[i], w));
  for (std::size_t j = 0; j < w.size(); ++j) pairs.emplace_back(nearest(w[j], m), j);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return Correspondence(m.size(), w.size(), std::move(pairs));
}

double correspondence_cost(const Correspondence& c, const PointCloud& m,
                           const PointCloud& w, Norm norm) {
  if (c.left_size() != m.size() || c.right_size() != w.size()) {
    throw InputError("correspondence does not fit the given clouds");
  }
  double worst = 0.0;
  for (const auto& [i, j] : c.pairs()) worst = std::max(worst, dist(m[i], w[j], norm));
  return worst;
}

double hausdorff_via_correspondence(const PointCloud& m, const PointCloud& w,
                                    Norm norm) {
  return correspondence_cost(nearest_neighbor_correspondence(m, w, norm), m, w, norm);
}

}  // namespace chebstab
