#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chebstab/geometry.hpp"

namespace chebstab {

// Seed used for the point-order shuffle of cheb_l2 when none is given.
inline constexpr std::uint64_t kDefaultBallSeed = 42;

// Chebyshev radius and the full set of Chebyshev centres in l^n_inf.
struct ChebResultBox {
  double radius;
  AxisBox center_set;
};

// Minimum enclosing Euclidean ball. `support` holds the indices (into the
// input cloud) of the points that determine the ball, `weights` the
// barycentric coordinates of `center` with respect to them.
struct ChebResultBall {
  double radius;
  Vector center;
  std::vector<std::size_t> support;
  std::vector<double> weights;
};

// Exact centre box: R = max_j span_j / 2 and, per coordinate,
// [max_j - R, min_j + R].
ChebResultBox cheb_linf(const PointCloud& cloud);

double cheb_radius_linf(const PointCloud& cloud);

// Exact minimum enclosing ball via move-to-front Welzl recursion on a
// seeded random permutation of the points.
ChebResultBall cheb_l2(const PointCloud& cloud,
                       std::uint64_t seed = kDefaultBallSeed);

struct OracleResult {
  double objective;
  Vector argmin;
  std::size_t iterations;
};

// Norm-agnostic minimiser of x -> farthest_dist(cloud, x, norm) using only
// function values and subgradients (central-cut ellipsoid method, bisection
// in one dimension). Starts at the midpoint of the bounding box and stops
// once the certified optimality gap drops below `gap_tol`.
OracleResult cheb_numeric_oracle(const PointCloud& cloud, Norm norm,
                                 double gap_tol = 1e-10);

// Whether the open minimum enclosing Euclidean balls of m and w are disjoint.
// Tangency (within 1e-12) counts as disjoint.
bool enclosing_balls_disjoint(const PointCloud& m, const PointCloud& w,
                              std::uint64_t seed = kDefaultBallSeed);

}  // namespace chebstab
