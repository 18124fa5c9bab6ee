#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace dramsey {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kDefaultTol = 1e-9;

/// A finite ordered point set in R^dim. Points are stored as the columns of a
/// dim x n matrix. Construction validates: nonempty, dim >= 1, finite entries.
class Configuration {
 public:
  explicit Configuration(Matrix points);
  Configuration(std::size_t dim, const std::vector<std::vector<double>>& rows);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(points_.rows()); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(points_.cols()); }

  auto point(std::size_t i) const { return points_.col(static_cast<Eigen::Index>(i)); }
  const Matrix& points() const noexcept { return points_; }

  std::vector<std::vector<double>> rows() const;

  /// Copy with every coordinate multiplied by `factor`.
  Configuration scaled(double factor) const;

 private:
  Matrix points_;
};

/// Orthogonal matrix plus translation, acting as x -> R x + t. Reflections are
/// permitted.
class RigidMotion {
 public:
  RigidMotion(Matrix rotation, Vector translation, double tol = kDefaultTol);

  static RigidMotion identity(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(translation_.size()); }
  const Matrix& rotation() const noexcept { return rotation_; }
  const Vector& translation() const noexcept { return translation_; }

  RigidMotion inverse() const;
  /// (this * other)(x) = this(other(x)).
  RigidMotion compose(const RigidMotion& other) const;

 private:
  Matrix rotation_;
  Vector translation_;
};

/// Symmetric, zero-diagonal matrix of pairwise Euclidean distances.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(Matrix entries);

  std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Matrix& entries() const noexcept { return entries_; }

 private:
  Matrix entries_;
};

double diameter(const Configuration& c);
DistanceMatrix distance_matrix(const Configuration& c);
Configuration apply_motion(const Configuration& c, const RigidMotion& m);

/// True iff some relabelling of `b` matches the distance matrix of `a`
/// entrywise within `tol`. Reflections count as congruences.
bool is_congruent(const Configuration& a, const Configuration& b, double tol = kDefaultTol);

/// Rank of the difference vectors p_i - p_0, singular values below
/// tol * sigma_max treated as zero.
std::size_t affine_dimension(const Configuration& c, double tol = kDefaultTol);

/// Orthonormal basis (columns) of the direction space of the affine hull.
Matrix affine_hull_basis(const Configuration& c, double tol = kDefaultTol);

/// Max norm minus min norm of the points (the spread functional).
double spread(const Configuration& c);

}  // namespace dramsey
