#include "dramsey/spheres.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <numeric>
#include <random>
#include <string>

#include "dramsey/error.hpp"
#include "dramsey/random.hpp"

namespace dramsey {

namespace {

using Index = std::size_t;

Ball ball_through(const Matrix& pts, const std::vector<Index>& support) {
  const Eigen::Index d = pts.rows();
  if (support.empty()) return Ball{Vector::Zero(d), -1.0};
  const Vector s0 = pts.col(static_cast<Eigen::Index>(support[0]));
  const auto k = static_cast<Eigen::Index>(support.size() - 1);
  if (k == 0) return Ball{s0, 0.0};

  Matrix v(d, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    v.col(j) = pts.col(static_cast<Eigen::Index>(support[static_cast<std::size_t>(j) + 1])) - s0;
  }
  // Centre s0 + V lambda with <c - s0, v_j> = |v_j|^2 / 2 for every j.
  const Matrix gram = v.transpose() * v;
  const Vector rhs = 0.5 * gram.diagonal();
  Eigen::ColPivHouseholderQR<Matrix> qr(gram);
  Vector lambda;
  if (qr.rank() == k) {
    lambda = qr.solve(rhs);
  } else {
    lambda = gram.completeOrthogonalDecomposition().solve(rhs);
  }
  Ball b{s0 + v * lambda, 0.0};
  for (Index s : support) {
    b.radius = std::max(b.radius, (pts.col(static_cast<Eigen::Index>(s)) - b.center).norm());
  }
  return b;
}

class MoveToFront {
 public:
  MoveToFront(const Matrix& pts, double eps, std::uint64_t seed) : pts_(pts), eps_(eps) {
    std::vector<Index> idx(static_cast<std::size_t>(pts.cols()));
    std::iota(idx.begin(), idx.end(), Index{0});
    Rng rng(seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    order_.assign(idx.begin(), idx.end());
    max_support_ = static_cast<std::size_t>(pts.rows()) + 1;
  }

  EnclosingBall run() {
    support_.clear();
    recurse(order_.end(), 0);
    return EnclosingBall{ball_, best_support_};
  }

 private:
  bool inside(Index i) const {
    if (ball_.radius < 0.0) return false;
    return (pts_.col(static_cast<Eigen::Index>(i)) - ball_.center).norm() <= ball_.radius + eps_;
  }

  void recurse(std::list<Index>::iterator end, std::size_t depth) {
    // Depth is bounded by the support size, which never exceeds dim + 1.
    if (depth > max_support_) {
      throw Error(ErrorCode::NonConvergence, "Welzl recursion exceeded dim + 1 levels");
    }
    ball_ = ball_through(pts_, support_);
    best_support_ = support_;
    if (support_.size() == max_support_) return;
    for (auto it = order_.begin(); it != end;) {
      auto next = std::next(it);
      if (!inside(*it)) {
        support_.push_back(*it);
        recurse(it, depth + 1);
        support_.pop_back();
        order_.splice(order_.begin(), order_, it);
      }
      it = next;
    }
  }

  const Matrix& pts_;
  double eps_;
  std::list<Index> order_;
  std::vector<Index> support_;
  std::vector<Index> best_support_;
  Ball ball_;
  std::size_t max_support_ = 0;
};

double farthest(const Matrix& pts, const Vector& center) {
  return (pts.colwise() - center).colwise().norm().maxCoeff();
}

double binomial_sum(std::size_t n, std::size_t kmax, double cap) {
  double total = 0.0;
  double term = 1.0;
  for (std::size_t k = 1; k <= kmax && k <= n; ++k) {
    term = term * static_cast<double>(n - k + 1) / static_cast<double>(k);
    total += term;
    if (total > cap) break;
  }
  return total;
}

// Exhaustive fallback: the smallest support ball over subsets of size at most
// dim + 1 that encloses everything.
bool enumerate_supports(const Matrix& pts, double eps, EnclosingBall& best) {
  const auto n = static_cast<std::size_t>(pts.cols());
  const std::size_t kmax = std::min(n, static_cast<std::size_t>(pts.rows()) + 1);
  bool found = false;
  std::vector<Index> subset;
  auto visit = [&](auto&& self, Index start) -> void {
    if (!subset.empty()) {
      Ball b = ball_through(pts, subset);
      if ((!found || b.radius < best.ball.radius) && farthest(pts, b.center) <= b.radius + eps) {
        best = EnclosingBall{b, subset};
        found = true;
      }
    }
    if (subset.size() == kmax) return;
    for (Index i = start; i < n; ++i) {
      subset.push_back(i);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  visit(visit, 0);
  return found;
}

}  // namespace

Ball support_ball(const Configuration& c, const std::vector<std::size_t>& support) {
  for (auto s : support) {
    if (s >= c.size()) throw Error(ErrorCode::InvalidArgument, "support index out of range");
  }
  return ball_through(c.points(), support);
}

EnclosingBall welzl(const Configuration& c, std::uint64_t seed) {
  const Matrix& pts = c.points();
  const double diam = diameter(c);
  if (diam == 0.0) return EnclosingBall{Ball{pts.col(0), 0.0}, {0}};
  const double eps = 1e-12 * diam;
  const double accept = 1e-10 * diam;

  EnclosingBall result;
  bool ok = false;
  for (std::uint64_t attempt = 0; attempt < 4 && !ok; ++attempt) {
    result = MoveToFront(pts, eps, derive_seed(seed, attempt)).run();
    ok = farthest(pts, result.ball.center) <= result.ball.radius + accept;
  }
  if (!ok) {
    EnclosingBall enumerated;
    const double subsets = binomial_sum(c.size(), c.dim() + 1, 2e6);
    if (subsets <= 2e6 && enumerate_supports(pts, accept, enumerated)) result = enumerated;
  }
  // The reported radius is the exact farthest distance from the centre, so
  // containment holds for every point regardless of the path taken.
  result.ball.radius = farthest(pts, result.ball.center);
  return result;
}

Ball min_enclosing_ball(const Configuration& c, std::uint64_t seed) {
  return welzl(c, seed).ball;
}

Sphere circumsphere(const Configuration& c, double tol) {
  if (c.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "circumsphere needs at least two points");
  }
  const double diam = diameter(c);
  if (diam == 0.0) throw Error(ErrorCode::Degenerate, "all points coincide");

  const Matrix basis = affine_hull_basis(c, tol);
  const Matrix& pts = c.points();
  const Vector p0 = pts.col(0);
  const Eigen::Index m = basis.cols();
  const Eigen::Index k = pts.cols() - 1;

  // Hull coordinates y_j of p_j - p_0; solve 2 <x, y_j> = |y_j|^2.
  Matrix y(m, k);
  for (Eigen::Index j = 0; j < k; ++j) y.col(j) = basis.transpose() * (pts.col(j + 1) - p0);
  const Matrix a = 2.0 * y.transpose();
  const Vector b = y.colwise().squaredNorm().transpose();
  const Vector x = a.colPivHouseholderQr().solve(b);

  Sphere s;
  s.center = p0 + basis * x;
  s.carrier = basis;
  const Vector dist = (pts.colwise() - s.center).colwise().norm().transpose();
  s.radius = dist.mean();
  s.residual = (dist.array() - s.radius).abs().maxCoeff();
  if (!(s.residual <= tol * diam)) {
    throw Error(ErrorCode::NotSpherical,
                "points lie on no common sphere (residual " + std::to_string(s.residual) + ")");
  }
  return s;
}

double circumradius(const Configuration& c) { return circumsphere(c).radius; }

bool is_spherical(const Configuration& c, double tol) {
  try {
    circumsphere(c, tol);
    return true;
  } catch (const Error&) {
    return false;
  }
}

double jung_bound(const Configuration& c) {
  const auto m = static_cast<double>(affine_dimension(c));
  if (m == 0.0) return 0.0;
  return std::sqrt(m / (2.0 * m + 2.0)) * diameter(c);
}

Vector circumcenter_barycentric(const Configuration& c, double tol) {
  const std::size_t n = c.size();
  if (n == 1) return Vector::Ones(1);
  if (affine_dimension(c, tol) != n - 1) {
    throw Error(ErrorCode::NotSimplex, "points are affinely dependent");
  }
  const Sphere s = circumsphere(c, tol);
  const Matrix& pts = c.points();
  const auto k = static_cast<Eigen::Index>(n - 1);
  Matrix diff(pts.rows(), k);
  for (Eigen::Index j = 0; j < k; ++j) diff.col(j) = pts.col(j + 1) - pts.col(0);
  const Vector tail = diff.colPivHouseholderQr().solve(Vector(s.center - pts.col(0)));
  Vector bary(k + 1);
  bary(0) = 1.0 - tail.sum();
  bary.tail(k) = tail;
  return bary;
}

bool circumcenter_in_hull(const Configuration& c, double tol) {
  return circumcenter_barycentric(c, tol).minCoeff() >= -tol;
}

}  // namespace dramsey
