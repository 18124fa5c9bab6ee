#pragma once

#include <cstddef>

#include "dramsey/geom.hpp"

namespace dramsey {

/// d+1 points in R^d with all pairwise distances 1, centred at the origin.
/// Built from the scaled standard simplex e_i / sqrt(2) expressed in the
/// Helmert basis of the hyperplane sum(x) = 0.
Configuration regular_simplex(std::size_t d);

/// Parameters of the almost-regular simplex with its apex lifted to radius
/// r = sqrt(1/2 + delta); the base unit (d-1)-simplex sits in the slice
/// x_d = a, a = sqrt(1/(2d) + delta), on the sphere of radius r.
struct SimplexSpec {
  std::size_t d = 2;
  double delta = 0.0;

  double r() const;
  double a() const;
  /// Squared apex-to-base distance 1 + 2 delta - 2 r a.
  double apex_distance_sq() const;
  /// Throws DomainError unless d >= 2, delta > 0 and apex_distance_sq() < 1.
  void validate() const;
};

Configuration cor3_simplex(std::size_t d, double delta);

/// Isosceles triangle with apex angle alpha (degrees, 90 < alpha < 180) and
/// base a: (0,0), (a,0), (a/2, R - h) with R = a / (2 sin alpha),
/// h = sqrt(R^2 - a^2/4).
Configuration obtuse_triangle(double alpha_deg, double a);

/// Largest interior angle of a three-point configuration in degrees, from the
/// law of cosines.
double largest_angle_deg(const Configuration& triangle);

/// Mean squared-distance deficit from the diameter, normalised by diam^2:
/// sum_{i<j} (diam^2 - |p_i - p_j|^2) / (binom(n, 2) * diam^2).
double almost_regular_measure(const Configuration& c);

}  // namespace dramsey
