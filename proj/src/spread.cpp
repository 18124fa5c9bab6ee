#include "dramsey/spread.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "copy_sampler.hpp"
#include "dramsey/error.hpp"
#include "dramsey/random.hpp"
#include "dramsey/spheres.hpp"
#include "nelder_mead.hpp"
#include "parallel.hpp"

namespace dramsey {

namespace detail {

LiftedProblem lift(const SpreadProblem& p) {
  if (!(p.radius > 0.0) || !std::isfinite(p.radius)) {
    throw Error(ErrorCode::DomainError, "ball radius must be positive and finite");
  }
  const std::size_t m = affine_dimension(p.target);
  const std::size_t dim = resolved_ambient_dim(p);
  const auto d = static_cast<Eigen::Index>(dim);
  const auto n = static_cast<Eigen::Index>(p.target.size());

  Matrix pts = Matrix::Zero(d, n);
  if (p.target.dim() <= dim) {
    pts.topRows(static_cast<Eigen::Index>(p.target.dim())) = p.target.points();
  } else {
    const Matrix basis = affine_hull_basis(p.target);
    const Vector origin = min_enclosing_ball(p.target).center;
    pts.topRows(static_cast<Eigen::Index>(m)) =
        basis.transpose() * (p.target.points().colwise() - origin);
  }
  Configuration lifted(std::move(pts));
  const Ball meb = min_enclosing_ball(lifted);
  Matrix centered = lifted.points().colwise() - meb.center;
  return LiftedProblem{std::move(lifted), meb.center, std::move(centered), meb.radius, p.radius,
                       dim};
}

}  // namespace detail

std::size_t resolved_ambient_dim(const SpreadProblem& p) {
  const std::size_t m = affine_dimension(p.target);
  if (p.ambient_dim == 0) return m + 1;
  if (p.ambient_dim < m) {
    throw Error(ErrorCode::DomainError,
                "ambient dimension " + std::to_string(p.ambient_dim) +
                    " is smaller than the affine dimension " + std::to_string(m));
  }
  return p.ambient_dim;
}

Configuration lifted_target(const SpreadProblem& p) { return detail::lift(p).lifted; }

namespace {

constexpr double kFeasibilitySlack = 1e-9;

bool fits(double meb_radius, double r) { return meb_radius <= r + kFeasibilitySlack; }

Matrix exp_skew(const Vector& params, std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  if (d == 1) return Matrix::Identity(1, 1);
  if (d == 2) {
    const double c = std::cos(params(0));
    const double s = std::sin(params(0));
    Matrix r(2, 2);
    r << c, s, -s, c;
    return r;
  }
  Matrix skew = Matrix::Zero(d, d);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j, ++k) {
      skew(i, j) = params(k);
      skew(j, i) = -params(k);
    }
  }
  if (d == 3) {
    // Rodrigues.
    const double angle = std::sqrt(0.5 * skew.squaredNorm());
    Matrix r = Matrix::Identity(3, 3);
    if (angle < 1e-300) return r;
    const double a = std::sin(angle) / angle;
    const double b = (1.0 - std::cos(angle)) / (angle * angle);
    r += a * skew + b * skew * skew;
    return r;
  }
  return skew.exp();
}

struct Placement {
  Matrix rotation;
  Vector shift;
};

class SpreadObjective {
 public:
  SpreadObjective(const detail::LiftedProblem& lp, Matrix base)
      : lp_(lp), base_(std::move(base)),
        rot_params_(static_cast<Eigen::Index>(lp.dim * (lp.dim - 1) / 2)) {}

  Eigen::Index rotation_params() const { return rot_params_; }
  Eigen::Index size() const { return rot_params_ + static_cast<Eigen::Index>(lp_.dim); }

  Placement placement(const Vector& theta) const {
    Matrix rot = rot_params_ > 0 ? Matrix(base_ * exp_skew(theta.head(rot_params_), lp_.dim))
                                 : base_;
    return Placement{std::move(rot), theta.tail(static_cast<Eigen::Index>(lp_.dim))};
  }

  // (spread, max norm) of the copy described by theta.
  std::pair<double, double> measure(const Placement& pl) const {
    Matrix x = pl.rotation * lp_.centered;
    x.colwise() += pl.shift;
    const Vector norms = x.colwise().norm().transpose();
    return {norms.maxCoeff() - norms.minCoeff(), norms.maxCoeff()};
  }

  double penalised(const Vector& theta, double mu) const {
    const auto [s, max_norm] = measure(placement(theta));
    const double excess = std::max(0.0, max_norm - lp_.radius);
    return s + mu * excess * excess;
  }

 private:
  const detail::LiftedProblem& lp_;
  Matrix base_;
  Eigen::Index rot_params_;
};

struct RestartResult {
  double value = std::numeric_limits<double>::infinity();
  double violation = std::numeric_limits<double>::infinity();
  Placement placement;
  std::size_t evaluations = 0;
};

// Shrinks the shift toward the origin until every point is inside the ball.
// Feasible shifts form a convex set containing 0 (the MEB-centred copy fits),
// so bisection on the scale factor is exact.
Placement repair(const SpreadObjective& obj, Placement pl, double r) {
  if (obj.measure(pl).second <= r) return pl;
  double lo = 0.0;
  double hi = 1.0;
  Placement trial = pl;
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    trial.shift = mid * pl.shift;
    if (obj.measure(trial).second <= r) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  pl.shift *= lo;
  return pl;
}

RestartResult local_search(const detail::LiftedProblem& lp, const SpreadOptions& opts,
                           Matrix base, Vector start) {
  const SpreadObjective obj(lp, std::move(base));
  Vector steps(obj.size());
  steps.head(obj.rotation_params()).setConstant(0.5);
  steps.tail(static_cast<Eigen::Index>(lp.dim)).setConstant(0.25 * lp.radius);

  detail::NelderMeadOptions nm;
  nm.ftol = opts.tolerance;
  nm.xtol = std::max(opts.tolerance, 1e-14);
  nm.max_evaluations = opts.max_evaluations;

  RestartResult out;
  out.evaluations = 0;
  Vector theta = std::move(start);
  for (std::size_t stage = 0; stage < opts.penalty_schedule.size(); ++stage) {
    const double mu = opts.penalty_schedule[stage];
    const auto f = [&](const Vector& x) { return obj.penalised(x, mu); };
    const Vector stage_steps = steps * std::max(0.02, std::pow(0.5, static_cast<double>(stage)));
    double current = f(theta);
    // Re-seeding the simplex at the incumbent counters premature collapse on
    // the nonsmooth max - min objective.
    for (int attempt = 0; attempt < 4; ++attempt) {
      const auto res = detail::nelder_mead(f, theta, stage_steps, nm);
      out.evaluations += res.evaluations;
      const bool improved = res.value < current - opts.tolerance;
      if (res.value <= current) {
        theta = res.x;
        current = res.value;
      }
      if (!improved) break;
    }
  }
  const Placement raw = obj.placement(theta);
  out.violation = std::max(0.0, obj.measure(raw).second - lp.radius);
  out.placement = repair(obj, raw, lp.radius);
  out.value = obj.measure(out.placement).first;
  return out;
}

RigidMotion motion_on_lifted(const detail::LiftedProblem& lp, const Placement& pl) {
  // x = Q (z - c) + t  =  Q z + (t - Q c).
  return RigidMotion(pl.rotation, pl.shift - pl.rotation * lp.meb_center);
}

}  // namespace

Configuration SpreadEstimate::placement() const { return apply_motion(lifted_target, best_motion); }

bool embedding_feasible(const SpreadProblem& p) {
  if (!(p.radius > 0.0)) return false;
  return fits(min_enclosing_ball(p.target).radius, p.radius);
}

SpreadEstimate estimate_c(const SpreadProblem& p, const SpreadOptions& opts) {
  if (opts.restarts == 0) throw Error(ErrorCode::InvalidArgument, "restarts must be positive");
  if (opts.penalty_schedule.empty()) {
    throw Error(ErrorCode::InvalidArgument, "penalty schedule must not be empty");
  }
  const detail::LiftedProblem lp = detail::lift(p);

  SpreadEstimate est;
  est.lifted_target = lp.lifted;
  est.ambient_dim = lp.dim;
  est.meb_radius = lp.meb_radius;
  est.best_motion = RigidMotion::identity(lp.dim);
  if (!fits(lp.meb_radius, lp.radius)) {
    est.feasible = false;
    est.c_estimate = std::numeric_limits<double>::quiet_NaN();
    return est;
  }
  est.feasible = true;

  std::vector<RestartResult> results(opts.restarts);
  detail::parallel_for(opts.restarts, opts.threads, [&](std::size_t k) {
    Rng rng(derive_seed(opts.seed, k));
    Matrix base = random_orthogonal(lp.dim, rng);
    Vector start = Vector::Zero(static_cast<Eigen::Index>(lp.dim * (lp.dim - 1) / 2 + lp.dim));
    start.tail(static_cast<Eigen::Index>(lp.dim)) = random_in_ball(lp.dim, lp.radius, rng);
    results[k] = local_search(lp, opts, std::move(base), std::move(start));
  });

  std::size_t best = 0;
  for (std::size_t k = 0; k < results.size(); ++k) {
    est.evaluations += results[k].evaluations;
    if (results[k].violation <= opts.feasibility_tolerance) ++est.feasible_restarts;
    if (results[k].value < results[best].value) best = k;
  }
  est.restarts = opts.restarts;
  if (est.feasible_restarts == 0) {
    throw Error(ErrorCode::NonConvergence,
                "no restart reached penalty feasibility within " +
                    std::to_string(opts.feasibility_tolerance));
  }
  Placement best_pl = results[best].placement;
  const double best_value = results[best].value;

  if (opts.oracle_samples > 0) {
    const OracleResult oracle = sample_spread_oracle_detailed(
        p, opts.oracle_samples, derive_seed(opts.seed, 0x6f7261636c65ULL), opts.threads);
    est.oracle_value = oracle.min_spread;
    if (oracle.min_spread < best_value - 1e-6) {
      // Recover (Q, t) in the MEB-centred frame from the oracle's motion.
      const Matrix& q = oracle.best_motion.rotation();
      const Vector shift = oracle.best_motion.translation() + q * lp.meb_center;
      Vector start = Vector::Zero(static_cast<Eigen::Index>(lp.dim * (lp.dim - 1) / 2 + lp.dim));
      start.tail(static_cast<Eigen::Index>(lp.dim)) = shift;
      const RestartResult polished = local_search(lp, opts, q, std::move(start));
      est.evaluations += polished.evaluations;
      est.polished_from_oracle = true;
      if (polished.value < oracle.min_spread) {
        best_pl = polished.placement;
      } else {
        best_pl = Placement{q, shift};
      }
    }
  }
  est.best_motion = motion_on_lifted(lp, best_pl);
  est.c_estimate = spread(est.placement());
  return est;
}

OracleResult sample_spread_oracle_detailed(const SpreadProblem& p, std::size_t n_samples,
                                           std::uint64_t seed, unsigned threads) {
  if (n_samples == 0) throw Error(ErrorCode::EmptySample, "sample count must be positive");
  const detail::LiftedProblem lp = detail::lift(p);
  if (!fits(lp.meb_radius, lp.radius)) {
    throw Error(ErrorCode::Infeasible, "minimum enclosing ball radius " +
                                           std::to_string(lp.meb_radius) + " exceeds " +
                                           std::to_string(lp.radius));
  }

  struct Best {
    double value = std::numeric_limits<double>::infinity();
    std::size_t index = 0;
    Matrix rotation;
    Vector shift;
  };
  const Best best = detail::sample_copies(
      lp, n_samples, seed, threads, Best{},
      [](Best& acc, std::size_t i, const detail::CopyDraw& draw) {
        const Vector norms = draw.points.colwise().norm().transpose();
        const double s = norms.maxCoeff() - norms.minCoeff();
        if (s < acc.value) acc = Best{s, i, draw.rotation, draw.shift};
      },
      [](Best& total, const Best& part) {
        if (part.value < total.value || (part.value == total.value && part.index < total.index)) {
          total = part;
        }
      });

  OracleResult out;
  out.min_spread = best.value;
  out.samples = n_samples;
  out.best_index = best.index;
  out.best_motion = motion_on_lifted(lp, Placement{best.rotation, best.shift});
  return out;
}

double sample_spread_oracle(const SpreadProblem& p, std::size_t n_samples, std::uint64_t seed) {
  return sample_spread_oracle_detailed(p, n_samples, seed).min_spread;
}

}  // namespace dramsey
