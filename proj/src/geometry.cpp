#include "chebstab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace chebstab {

std::string_view to_string(Norm norm) {
  return norm == Norm::linf ? "linf" : "l2";
}

Norm parse_norm(std::string_view name) {
  if (name == "linf") return Norm::linf;
  if (name == "l2") return Norm::l2;
  throw InputError("unknown norm '" + std::string(name) +
                   "' (expected linf or l2)");
}

void require_same_dim(std::size_t a, std::size_t b, std::string_view what) {
  if (a != b) {
    throw InputError(std::string(what) + ": dimension mismatch (" +
                     std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("vector must have dim >= 1");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw InputError("vector coordinate is not finite");
  }
}

Vector::Vector(std::initializer_list<double> coords)
    : Vector(std::vector<double>(coords)) {}

Vector Vector::operator+(const Vector& other) const {
  require_same_dim(dim(), other.dim(), "vector add");
  std::vector<double> out(dim());
  for (std::size_t j = 0; j < dim(); ++j) out[j] = coords_[j] + other[j];
  return Vector(std::move(out));
}

Vector Vector::operator-(const Vector& other) const {
  require_same_dim(dim(), other.dim(), "vector subtract");
  std::vector<double> out(dim());
  for (std::size_t j = 0; j < dim(); ++j) out[j] = coords_[j] - other[j];
  return Vector(std::move(out));
}

Vector Vector::operator*(double factor) const {
  std::vector<double> out(dim());
  for (std::size_t j = 0; j < dim(); ++j) out[j] = coords_[j] * factor;
  return Vector(std::move(out));
}

PointCloud::PointCloud(std::vector<Vector> points) : points_(std::move(points)) {
  if (points_.empty()) throw InputError("point cloud must contain at least one point");
  const std::size_t d = points_.front().dim();
  for (const Vector& p : points_) require_same_dim(d, p.dim(), "point cloud");
}

PointCloud::PointCloud(std::initializer_list<Vector> points)
    : PointCloud(std::vector<Vector>(points)) {}

PointCloud PointCloud::translated(const Vector& offset) const {
  std::vector<Vector> out;
  out.reserve(size());
  for (const Vector& p : points_) out.push_back(p + offset);
  return PointCloud(std::move(out));
}

PointCloud PointCloud::scaled(double factor) const {
  std::vector<Vector> out;
  out.reserve(size());
  for (const Vector& p : points_) out.push_back(p * factor);
  return PointCloud(std::move(out));
}

AxisBox::AxisBox(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw InputError("box must have dim >= 1");
  for (const Interval& iv : intervals_) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
      throw InputError("box endpoint is not finite");
    }
    if (iv.lo > iv.hi) throw InputError("box interval has lo > hi");
  }
}

bool AxisBox::contains(const Vector& x, double tol) const {
  return box_dist_linf(x, *this) <= tol;
}

std::size_t AxisBox::rank() const {
  return static_cast<std::size_t>(std::count_if(
      intervals_.begin(), intervals_.end(),
      [](const Interval& iv) { return iv.hi > iv.lo; }));
}

double dist(const Vector& x, const Vector& y, Norm norm) {
  require_same_dim(x.dim(), y.dim(), "dist");
  if (norm == Norm::linf) {
    double m = 0.0;
    for (std::size_t j = 0; j < x.dim(); ++j) m = std::max(m, std::abs(x[j] - y[j]));
    return m;
  }
  double s = 0.0;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    const double d = x[j] - y[j];
    s += d * d;
  }
  return std::sqrt(s);
}

double point_to_set_dist(const Vector& x, const PointCloud& cloud, Norm norm) {
  require_same_dim(x.dim(), cloud.dim(), "point_to_set_dist");
  double best = std::numeric_limits<double>::infinity();
  for (const Vector& u : cloud) best = std::min(best, dist(x, u, norm));
  return best;
}

double farthest_dist(const PointCloud& cloud, const Vector& x, Norm norm) {
  require_same_dim(x.dim(), cloud.dim(), "farthest_dist");
  double worst = 0.0;
  for (const Vector& u : cloud) worst = std::max(worst, dist(u, x, norm));
  return worst;
}

double diameter(const PointCloud& cloud, Norm norm) {
  double d = 0.0;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t k = i + 1; k < cloud.size(); ++k) {
      d = std::max(d, dist(cloud[i], cloud[k], norm));
    }
  }
  return d;
}

Vector midpoint(const Vector& x, const Vector& y) {
  require_same_dim(x.dim(), y.dim(), "midpoint");
  std::vector<double> out(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) out[j] = 0.5 * (x[j] + y[j]);
  return Vector(std::move(out));
}

double box_dist_linf(const Vector& x, const AxisBox& box) {
  require_same_dim(x.dim(), box.dim(), "box_dist_linf");
  double m = 0.0;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    const Interval& iv = box[j];
    const double excess = std::max({iv.lo - x[j], x[j] - iv.hi, 0.0});
    m = std::max(m, excess);
  }
  return m;
}

}  // namespace chebstab
