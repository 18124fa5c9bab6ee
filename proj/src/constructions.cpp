#include "dramsey/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dramsey/error.hpp"

namespace dramsey {

Configuration regular_simplex(std::size_t d) {
  if (d < 1) throw Error(ErrorCode::DomainError, "regular simplex needs d >= 1");
  const auto dd = static_cast<Eigen::Index>(d);
  // Row k of the Helmert matrix: (1,...,1,-k,0,...,0) / sqrt(k(k+1)).
  Matrix helmert = Matrix::Zero(dd, dd + 1);
  for (Eigen::Index k = 1; k <= dd; ++k) {
    const double norm = std::sqrt(static_cast<double>(k * (k + 1)));
    for (Eigen::Index j = 0; j < k; ++j) helmert(k - 1, j) = 1.0 / norm;
    helmert(k - 1, k) = -static_cast<double>(k) / norm;
  }
  // Vertices e_i / sqrt(2); the Helmert rows are orthogonal to the all-ones
  // vector, so the projection also removes the centroid.
  Matrix pts = helmert / std::numbers::sqrt2;
  return Configuration(std::move(pts));
}

double SimplexSpec::r() const { return std::sqrt(0.5 + delta); }

double SimplexSpec::a() const { return std::sqrt(1.0 / (2.0 * static_cast<double>(d)) + delta); }

double SimplexSpec::apex_distance_sq() const { return 1.0 + 2.0 * delta - 2.0 * r() * a(); }

void SimplexSpec::validate() const {
  if (d < 2) throw Error(ErrorCode::DomainError, "almost-regular construction needs d >= 2");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::DomainError, "delta must be positive and finite");
  }
  if (!(apex_distance_sq() < 1.0)) {
    throw Error(ErrorCode::DomainError,
                "delta too large: apex distance^2 " + std::to_string(apex_distance_sq()) +
                    " would exceed the unit diameter");
  }
}

Configuration cor3_simplex(std::size_t d, double delta) {
  const SimplexSpec spec{d, delta};
  spec.validate();
  const auto dd = static_cast<Eigen::Index>(d);
  Matrix pts = Matrix::Zero(dd, dd + 1);
  // The slice x_d = a of the r-ball has radius sqrt(r^2 - a^2) =
  // sqrt((d-1)/(2d)), exactly the circumradius of a unit (d-1)-simplex.
  pts.topLeftCorner(dd - 1, dd) = regular_simplex(d - 1).points();
  pts.block(dd - 1, 0, 1, dd).setConstant(spec.a());
  pts(dd - 1, dd) = spec.r();
  return Configuration(std::move(pts));
}

Configuration obtuse_triangle(double alpha_deg, double a) {
  if (!(alpha_deg > 90.0 && alpha_deg < 180.0)) {
    throw Error(ErrorCode::DomainError, "apex angle must lie strictly between 90 and 180 degrees");
  }
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::DomainError, "base length must be positive and finite");
  }
  const double big_r = a / (2.0 * std::sin(alpha_deg * std::numbers::pi / 180.0));
  const double h = std::sqrt(big_r * big_r - 0.25 * a * a);
  Matrix pts(2, 3);
  pts << 0.0, a, 0.5 * a,
         0.0, 0.0, big_r - h;
  return Configuration(std::move(pts));
}

double largest_angle_deg(const Configuration& triangle) {
  if (triangle.size() != 3) throw Error(ErrorCode::InvalidArgument, "expected three points");
  const auto d = distance_matrix(triangle);
  const double sides[3] = {d(1, 2), d(0, 2), d(0, 1)};
  double best = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double opp = sides[i];
    const double u = sides[(i + 1) % 3];
    const double v = sides[(i + 2) % 3];
    if (u == 0.0 || v == 0.0) throw Error(ErrorCode::Degenerate, "triangle has a repeated vertex");
    const double cosine = std::clamp((u * u + v * v - opp * opp) / (2.0 * u * v), -1.0, 1.0);
    best = std::max(best, std::acos(cosine) * 180.0 / std::numbers::pi);
  }
  return best;
}

double almost_regular_measure(const Configuration& c) {
  const std::size_t n = c.size();
  if (n < 2) throw Error(ErrorCode::Degenerate, "need at least two points");
  const auto d = distance_matrix(c);
  const double diam = d.entries().maxCoeff();
  if (diam == 0.0) throw Error(ErrorCode::Degenerate, "diameter is zero");
  const double diam2 = diam * diam;
  double deficit = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) deficit += diam2 - d(i, j) * d(i, j);
  }
  const double pairs = 0.5 * static_cast<double>(n * (n - 1));
  return deficit / (pairs * diam2);
}

}  // namespace dramsey
