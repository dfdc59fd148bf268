#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chebstab {

// Thrown for malformed or inconsistent inputs (dimension mismatch, empty
// clouds, non-finite coordinates, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Norm { linf, l2 };

std::string_view to_string(Norm norm);
// Accepts "linf" and "l2".
Norm parse_norm(std::string_view name);

// A point of R^n. Coordinates are always finite and dim() >= 1.
class Vector {
 public:
  explicit Vector(std::vector<double> coords);
  Vector(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t j) const { return coords_[j]; }
  std::span<const double> coords() const { return coords_; }

  Vector operator+(const Vector& other) const;
  Vector operator-(const Vector& other) const;
  Vector operator*(double factor) const;

  bool operator==(const Vector&) const = default;

 private:
  std::vector<double> coords_;
};

// Finite nonempty multiset of points sharing one dimension. Duplicates are
// kept as-is.
class PointCloud {
 public:
  explicit PointCloud(std::vector<Vector> points);
  PointCloud(std::initializer_list<Vector> points);

  std::size_t dim() const { return points_.front().dim(); }
  std::size_t size() const { return points_.size(); }
  const Vector& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Vector> points() const { return points_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  PointCloud translated(const Vector& offset) const;
  PointCloud scaled(double factor) const;

  bool operator==(const PointCloud&) const = default;

 private:
  std::vector<Vector> points_;
};

struct Interval {
  double lo;
  double hi;

  double width() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

// Axis-parallel box, possibly of zero width in any subset of coordinates.
class AxisBox {
 public:
  explicit AxisBox(std::vector<Interval> intervals);

  std::size_t dim() const { return intervals_.size(); }
  const Interval& operator[](std::size_t j) const { return intervals_[j]; }
  std::span<const Interval> intervals() const { return intervals_; }

  bool contains(const Vector& x, double tol = 0.0) const;
  // Number of coordinates with positive width (the k of the k-plane).
  std::size_t rank() const;

  bool operator==(const AxisBox&) const = default;

 private:
  std::vector<Interval> intervals_;
};

struct BallSpec {
  Vector center;
  double radius;
  Norm norm;
};

double dist(const Vector& x, const Vector& y, Norm norm);

// |xZ|: distance from x to the nearest point of cloud.
double point_to_set_dist(const Vector& x, const PointCloud& cloud, Norm norm);

// Mx: distance from x to the farthest point of cloud.
double farthest_dist(const PointCloud& cloud, const Vector& x, Norm norm);

double diameter(const PointCloud& cloud, Norm norm);

// Euclidean midpoint (x + y) / 2.
Vector midpoint(const Vector& x, const Vector& y);

// Max-norm distance from x to the box; zero iff x lies in the box.
double box_dist_linf(const Vector& x, const AxisBox& box);

void require_same_dim(std::size_t a, std::size_t b, std::string_view what);

}  // namespace chebstab
