#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chebstab/geometry.hpp"

namespace chebstab {

// A relation between the indices of two clouds in which every index of
// either side occurs at least once.
class Correspondence {
 public:
  Correspondence(std::size_t left_size, std::size_t right_size,
                 std::vector<std::pair<std::size_t, std::size_t>> pairs);

  std::size_t left_size() const { return left_size_; }
  std::size_t right_size() const { return right_size_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const {
    return pairs_;
  }

 private:
  std::size_t left_size_;
  std::size_t right_size_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

// sup over x in from of |x to|.
double directed_hausdorff(const PointCloud& from, const PointCloud& to, Norm norm);

// Hausdorff distance alpha(M, W).
double hausdorff(const PointCloud& m, const PointCloud& w, Norm norm);

// Hausdorff distance between axis boxes under the max norm (closed form).
double box_hausdorff_linf(const AxisBox& a, const AxisBox& b);

// sup over x in from of the max-norm distance from x to `to`.
double directed_box_hausdorff_linf(const AxisBox& from, const AxisBox& to);

// Bottleneck distance between equal-size multisets: the minimum over
// bijections of the largest matched distance. Exact; the result is always
// one of the pairwise distances.
double nnet_dist(const PointCloud& m, const PointCloud& w, Norm norm);

constexpr std::size_t kBruteForceMaxPoints = 8;

// Same quantity by enumerating every permutation; refuses sizes above
// kBruteForceMaxPoints.
double nnet_dist_bruteforce(const PointCloud& m, const PointCloud& w, Norm norm);

// Every point paired with its nearest neighbour(s) on the other side, in
// both directions. First minimiser wins on ties.
Correspondence nearest_neighbor_correspondence(const PointCloud& m,
                                               const PointCloud& w, Norm norm);

// Largest paired distance of a correspondence.
double correspondence_cost(const Correspondence& c, const PointCloud& m,
                           const PointCloud& w, Norm norm);

// Minimum correspondence cost, realised by the nearest-neighbour
// correspondence. Equals hausdorff(m, w, norm).
double hausdorff_via_correspondence(const PointCloud& m, const PointCloud& w,
                                    Norm norm);

}  // namespace chebstab
