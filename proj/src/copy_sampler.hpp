#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "dramsey/error.hpp"
#include "dramsey/random.hpp"
#include "dramsey/spread.hpp"
#include "parallel.hpp"

namespace dramsey::detail {

// The target in R^D, translated so its MEB centre is the origin.
struct LiftedProblem {
  Configuration lifted;
  Vector meb_center;
  Matrix centered;  // D x n, columns z_i - meb_center
  double meb_radius = 0.0;
  double radius = 0.0;
  std::size_t dim = 0;
};

LiftedProblem lift(const SpreadProblem& p);

inline constexpr std::size_t kSampleBlock = 8192;

// Largest t >= 0 with |w_i + t u| <= r for all columns w_i (|u| = 1). The
// feasible shifts form a convex set containing 0, so [0, t_max] is exactly
// the feasible part of the ray.
inline double max_feasible_shift(const Matrix& w, const Vector& u, double r) {
  double t_max = INFINITY;
  for (Eigen::Index i = 0; i < w.cols(); ++i) {
    const double wu = w.col(i).dot(u);
    const double disc = std::max(0.0, wu * wu - w.col(i).squaredNorm() + r * r);
    t_max = std::min(t_max, -wu + std::sqrt(disc));
  }
  return std::max(0.0, t_max);
}

// One random feasible copy: orthogonal Q (Haar, either determinant sign),
// uniform direction u, and shift t u with t = t_max on even indices (copies
// touching the sphere of radius r) and t = t_max * U^{1/D} on odd indices.
struct CopyDraw {
  Matrix rotation;
  Vector shift;
  Matrix points;
};

inline void draw_copy(const LiftedProblem& lp, std::size_t index, Rng& rng, CopyDraw& out) {
  out.rotation = random_orthogonal(lp.dim, rng);
  const Vector u = random_unit_vector(lp.dim, rng);
  out.points.noalias() = out.rotation * lp.centered;
  double t = max_feasible_shift(out.points, u, lp.radius);
  if (index % 2 == 1) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    t *= std::pow(unit(rng), 1.0 / static_cast<double>(lp.dim));
  }
  out.shift = t * u;
  out.points.colwise() += out.shift;
}

// Visits n random copies in fixed-size blocks, block b seeded by
// derive_seed(seed, b). Per-block accumulators are merged in block order, so
// the result is independent of thread count.
template <class Acc, class Visit, class Merge>
Acc sample_copies(const LiftedProblem& lp, std::size_t n, std::uint64_t seed, unsigned threads,
                  const Acc& init, Visit&& visit, Merge&& merge) {
  const std::size_t blocks = (n + kSampleBlock - 1) / kSampleBlock;
  std::vector<Acc> partial(blocks, init);
  parallel_for(blocks, threads, [&](std::size_t b) {
    Rng rng(derive_seed(seed, b));
    CopyDraw draw;
    const std::size_t begin = b * kSampleBlock;
    const std::size_t end = std::min(n, begin + kSampleBlock);
    for (std::size_t i = begin; i < end; ++i) {
      draw_copy(lp, i, rng, draw);
      visit(partial[b], i, draw);
    }
  });
  Acc total = init;
  for (const auto& acc : partial) merge(total, acc);
  return total;
}

}  // namespace dramsey::detail
