#include "chebstab/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <list>
#include <numeric>

#include "chebstab/rng.hpp"

namespace chebstab {

ChebResultBox cheb_linf(const PointCloud& cloud) {
  const std::size_t d = cloud.dim();
  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
  for (const Vector& p : cloud) {
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], p[j]);
      hi[j] = std::max(hi[j], p[j]);
    }
  }
  double radius = 0.0;
  for (std::size_t j = 0; j < d; ++j) radius = std::max(radius, 0.5 * (hi[j] - lo[j]));

  std::vector<Interval> box(d);
  for (std::size_t j = 0; j < d; ++j) {
    double a = hi[j] - radius;
    double b = lo[j] + radius;
    // The widest coordinate collapses to a point; rounding may cross it.
    if (a > b) a = b = 0.5 * (a + b);
    box[j] = {a, b};
  }
  return {radius, AxisBox(std::move(box))};
}

double cheb_radius_linf(const PointCloud& cloud) { return cheb_linf(cloud).radius; }

namespace {

// Solves the dense system a * x = b in place by Gaussian elimination with
// partial pivoting. Returns false when a pivot falls below rel_tol times the
// largest diagonal magnitude.
bool solve_dense(std::vector<double>& a, std::vector<double>& b, std::size_t n,
                 double rel_tol) {
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(a[i * n + i]));
  if (scale == 0.0) return n == 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    }
    if (std::abs(a[piv * n + col]) <= rel_tol * scale) return false;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
      std::swap(b[col], b[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i * n + c] * b[c];
    b[i] = s / a[i * n + i];
  }
  return true;
}

// Move-to-front variant of Welzl's recursion. The current ball is the
// circumscribed ball of the support stack at the time of the last successful
// push; pops leave it untouched.
class BallBuilder {
 public:
  BallBuilder(const PointCloud& cloud, std::uint64_t seed)
      : cloud_(cloud), dim_(cloud.dim()), center_(dim_, 0.0) {
    std::vector<std::size_t> order(cloud.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    rng.shuffle(order);
    order_.assign(order.begin(), order.end());
  }

  void run() {
    // A couple of extra sweeps absorb points rejected by degenerate pushes.
    for (int sweep = 0; sweep < 4; ++sweep) {
      mtf(order_.end());
      if (max_excess() <= 0.0) break;
    }
  }

  ChebResultBall result() const {
    Vector c(center_);
    return {farthest_dist(cloud_, c, Norm::l2), c, ball_support_, ball_weights_};
  }

 private:
  using Iter = std::list<std::size_t>::iterator;

  double excess(std::size_t idx) const {
    if (radius_ < 0.0) return 1.0;
    double s = 0.0;
    const Vector& p = cloud_[idx];
    for (std::size_t j = 0; j < dim_; ++j) {
      const double t = p[j] - center_[j];
      s += t * t;
    }
    return std::sqrt(s) - radius_ - 1e-12 * (1.0 + radius_);
  }

  double max_excess() const {
    double e = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cloud_.size(); ++i) e = std::max(e, excess(i));
    return e;
  }

  void mtf(Iter end) {
    if (support_.size() == dim_ + 1) return;
    for (Iter it = order_.begin(); it != end;) {
      Iter cur = it++;
      if (excess(*cur) > 0.0 && push(*cur)) {
        mtf(cur);
        support_.pop_back();
        order_.splice(order_.begin(), order_, cur);
      }
    }
  }

  bool push(std::size_t idx) {
    support_.push_back(idx);
    if (!circumball()) {
      support_.pop_back();
      return false;
    }
    return true;
  }

  // Smallest ball with all support points on its boundary; its centre lies
  // in their affine hull.
  bool circumball() {
    const Vector& origin = cloud_[support_.front()];
    const std::size_t k = support_.size() - 1;
    std::vector<std::vector<double>> v(k, std::vector<double>(dim_));
    for (std::size_t a = 0; a < k; ++a) {
      const Vector& p = cloud_[support_[a + 1]];
      for (std::size_t j = 0; j < dim_; ++j) v[a][j] = p[j] - origin[j];
    }
    std::vector<double> gram(k * k);
    std::vector<double> rhs(k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        gram[a * k + b] = std::inner_product(v[a].begin(), v[a].end(), v[b].begin(), 0.0);
      }
      rhs[a] = 0.5 * gram[a * k + a];
    }
    if (k > 0 && !solve_dense(gram, rhs, k, 1e-12)) return false;

    std::vector<double> c(origin.coords().begin(), origin.coords().end());
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t j = 0; j < dim_; ++j) c[j] += rhs[a] * v[a][j];
    }
    double r = 0.0;
    for (std::size_t s : support_) {
      double sq = 0.0;
      for (std::size_t j = 0; j < dim_; ++j) {
        const double t = cloud_[s][j] - c[j];
        sq += t * t;
      }
      r = std::max(r, std::sqrt(sq));
    }
    center_ = std::move(c);
    radius_ = r;
    ball_support_ = support_;
    ball_weights_.assign(k + 1, 0.0);
    double rest = 1.0;
    for (std::size_t a = 0; a < k; ++a) {
      ball_weights_[a + 1] = rhs[a];
      rest -= rhs[a];
    }
    ball_weights_[0] = rest;
    return true;
  }

  const PointCloud& cloud_;
  std::size_t dim_;
  std::list<std::size_t> order_;
  std::vector<std::size_t> support_;
  std::vector<double> center_;
  double radius_ = -1.0;
  std::vector<std::size_t> ball_support_;
  std::vector<double> ball_weights_;
};

struct ValueAndSubgradient {
  double value;
  std::vector<double> subgradient;
};

ValueAndSubgradient evaluate(const PointCloud& cloud, const std::vector<double>& x,
                             Norm norm) {
  const std::size_t d = x.size();
  ValueAndSubgradient out{0.0, std::vector<double>(d, 0.0)};
  if (norm == Norm::linf) {
    std::size_t best_j = 0;
    double best_diff = 0.0;
    for (const Vector& p : cloud) {
      for (std::size_t j = 0; j < d; ++j) {
        const double diff = x[j] - p[j];
        if (std::abs(diff) > out.value) {
          out.value = std::abs(diff);
          best_j = j;
          best_diff = diff;
        }
      }
    }
    if (out.value > 0.0) out.subgradient[best_j] = best_diff > 0.0 ? 1.0 : -1.0;
    return out;
  }
  const Vector* far = nullptr;
  for (const Vector& p : cloud) {
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j) s += (x[j] - p[j]) * (x[j] - p[j]);
    const double r = std::sqrt(s);
    if (far == nullptr || r > out.value) {
      out.value = r;
      far = &p;
    }
  }
  if (out.value > 0.0) {
    for (std::size_t j = 0; j < d; ++j) out.subgradient[j] = (x[j] - (*far)[j]) / out.value;
  }
  return out;
}

}  // namespace

ChebResultBall cheb_l2(const PointCloud& cloud, std::uint64_t seed) {
  BallBuilder builder(cloud, seed);
  builder.run();
  return builder.result();
}

OracleResult cheb_numeric_oracle(const PointCloud& cloud, Norm norm, double gap_tol) {
  const std::size_t d = cloud.dim();
  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
  for (const Vector& p : cloud) {
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], p[j]);
      hi[j] = std::max(hi[j], p[j]);
    }
  }
  std::vector<double> x(d);
  double half_diag = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    x[j] = 0.5 * (lo[j] + hi[j]);
    half_diag += 0.25 * (hi[j] - lo[j]) * (hi[j] - lo[j]);
  }
  // Every minimiser considered here lies in the bounding box, which this
  // ball contains with margin.
  const double rho = 2.0 * std::sqrt(half_diag) + 1.0;

  constexpr std::size_t kMaxIterations = 400000;
  ValueAndSubgradient fx = evaluate(cloud, x, norm);
  std::vector<double> best_x = x;
  double best = fx.value;
  double lower = 0.0;
  std::size_t iter = 0;

  if (d == 1) {
    double a = x[0] - rho;
    double b = x[0] + rho;
    while (iter < kMaxIterations && best - lower > gap_tol && b - a > 0.0) {
      ++iter;
      x[0] = 0.5 * (a + b);
      if (x[0] == a || x[0] == b) break;
      fx = evaluate(cloud, x, norm);
      if (fx.value < best) {
        best = fx.value;
        best_x = x;
      }
      // The objective is 1-Lipschitz, so the bracket bounds the gap.
      lower = std::max(lower, fx.value - (b - a));
      if (fx.subgradient[0] > 0.0) {
        b = x[0];
      } else if (fx.subgradient[0] < 0.0) {
        a = x[0];
      } else {
        break;
      }
    }
    return {best, Vector(best_x), iter};
  }

  const double n = static_cast<double>(d);
  std::vector<double> shape(d * d, 0.0);
  for (std::size_t j = 0; j < d; ++j) shape[j * d + j] = rho * rho;
  std::vector<double> pg(d);

  while (iter < kMaxIterations && best - lower > gap_tol) {
    ++iter;
    const std::vector<double>& g = fx.subgradient;
    for (std::size_t r = 0; r < d; ++r) {
      pg[r] = 0.0;
      for (std::size_t c = 0; c < d; ++c) pg[r] += shape[r * d + c] * g[c];
    }
    const double gpg = std::inner_product(g.begin(), g.end(), pg.begin(), 0.0);
    if (!(gpg > 0.0)) break;  // zero subgradient: x is optimal
    const double depth = std::sqrt(gpg);
    lower = std::max(lower, fx.value - depth);
    if (best - lower <= gap_tol) break;

    for (double& v : pg) v /= depth;
    for (std::size_t j = 0; j < d; ++j) x[j] -= pg[j] / (n + 1.0);
    const double grow = n * n / (n * n - 1.0);
    const double cut = 2.0 / (n + 1.0);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = r; c < d; ++c) {
        const double v = grow * (shape[r * d + c] - cut * pg[r] * pg[c]);
        shape[r * d + c] = v;
        shape[c * d + r] = v;
      }
    }
    fx = evaluate(cloud, x, norm);
    if (fx.value < best) {
      best = fx.value;
      best_x = x;
    }
  }
  return {best, Vector(best_x), iter};
}

bool enclosing_balls_disjoint(const PointCloud& m, const PointCloud& w,
                              std::uint64_t seed) {
  require_same_dim(m.dim(), w.dim(), "enclosing_balls_disjoint");
  const ChebResultBall bm = cheb_l2(m, seed);
  const ChebResultBall bw = cheb_l2(w, seed);
  return dist(bm.center, bw.center, Norm::l2) >= bm.radius + bw.radius - 1e-12;
}

}  // namespace chebstab
