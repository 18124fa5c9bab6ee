#pragma once

#include <cstdint>
#include <vector>

#include "dramsey/geom.hpp"

namespace dramsey {

struct Ball {
  Vector center;
  double radius = 0.0;

  bool contains(const Eigen::Ref<const Vector>& x, double tol = kDefaultTol) const {
    return (x - center).norm() <= radius + tol;
  }
};

/// Sphere through every point of a configuration, solved inside the affine
/// hull. `carrier` holds an orthonormal basis of the hull's direction space;
/// `residual` is the largest deviation of a point's distance from `radius`.
struct Sphere {
  Vector center;
  double radius = 0.0;
  Matrix carrier;
  double residual = 0.0;
};

struct EnclosingBall {
  Ball ball;
  std::vector<std::size_t> support;
};

/// Smallest closed ball containing all points (Welzl, move-to-front, seeded
/// shuffle). Falls back to support-set enumeration when the recursion fails
/// to enclose every point on degenerate input.
EnclosingBall welzl(const Configuration& c, std::uint64_t seed = 0);

Ball min_enclosing_ball(const Configuration& c, std::uint64_t seed = 0);

/// Smallest ball having every point of `support` on its boundary: the
/// equidistant point inside the affine hull of the support set.
Ball support_ball(const Configuration& c, const std::vector<std::size_t>& support);

/// Throws NotSpherical if the equidistance residual exceeds tol * diameter,
/// Degenerate if all points coincide, InvalidArgument for fewer than 2 points.
Sphere circumsphere(const Configuration& c, double tol = kDefaultTol);

double circumradius(const Configuration& c);

bool is_spherical(const Configuration& c, double tol = kDefaultTol);

/// sqrt(m / (2m + 2)) * diameter with m the affine dimension.
double jung_bound(const Configuration& c);

/// Barycentric coordinates of the circumcentre of a simplex (sum to 1).
Vector circumcenter_barycentric(const Configuration& c, double tol = kDefaultTol);

/// True iff every barycentric coordinate of the circumcentre is >= -tol.
/// Throws NotSimplex for affinely dependent input.
bool circumcenter_in_hull(const Configuration& c, double tol = kDefaultTol);

}  // namespace dramsey
