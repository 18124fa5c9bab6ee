#include "dramsey/random.hpp"

#include <cmath>

namespace dramsey {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix random_orthogonal(std::size_t dim, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(dim);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  // Uniform determinant sign.
  std::bernoulli_distribution flip(0.5);
  const bool negative = q.determinant() < 0.0;
  if (negative != flip(rng)) q.col(0) = -q.col(0);
  return q;
}

Vector random_unit_vector(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(static_cast<Eigen::Index>(dim));
  double n2 = 0.0;
  do {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = normal(rng);
    n2 = v.squaredNorm();
  } while (n2 < 1e-300);
  return v / std::sqrt(n2);
}

Vector random_in_ball(std::size_t dim, double radius, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double rho = radius * std::pow(unit(rng), 1.0 / static_cast<double>(dim));
  return rho * random_unit_vector(dim, rng);
}

RigidMotion random_motion(std::size_t dim, double translation_scale, Rng& rng) {
  Matrix q = random_orthogonal(dim, rng);
  Vector t = random_in_ball(dim, translation_scale, rng);
  return RigidMotion(std::move(q), std::move(t));
}

}  // namespace dramsey
