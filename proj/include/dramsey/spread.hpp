#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dramsey/geom.hpp"

namespace dramsey {

/// Placements of `target` inside the origin-centred ball of radius `radius`
/// in R^ambient_dim. ambient_dim == 0 selects affine_dimension(target) + 1,
/// which suffices: any copy in a higher-dimensional ball lives, together with
/// the origin, in a (d+1)-dimensional subspace.
struct SpreadProblem {
  Configuration target;
  double radius = 0.0;
  std::size_t ambient_dim = 0;
};

std::size_t resolved_ambient_dim(const SpreadProblem& p);

/// The target expressed in R^D: zero-padded when target.dim() <= D, otherwise
/// its affine-hull coordinates about the MEB centre. Rigid motions reported by
/// the estimator act on this configuration.
Configuration lifted_target(const SpreadProblem& p);

/// A congruent copy fits in the ball iff the MEB radius is at most r + 1e-9.
bool embedding_feasible(const SpreadProblem& p);

struct SpreadOptions {
  std::size_t restarts = 64;
  std::uint64_t seed = 0;
  std::vector<double> penalty_schedule = {1e1, 1e2, 1e3, 1e4, 1e5, 1e6};
  /// Nelder-Mead stopping tolerance on function values and simplex extent.
  double tolerance = 1e-12;
  /// Largest pre-repair constraint violation for a restart to count as
  /// having reached penalty feasibility.
  double feasibility_tolerance = 1e-5;
  std::size_t max_evaluations = 4000;
  /// When positive, the sampling oracle is run as a cross-check and the
  /// optimizer is restarted from its best sample if the oracle wins.
  std::size_t oracle_samples = 0;
  unsigned threads = 0;
};

/// Upper-bound estimate of the minimal spread over feasible copies. It is the
/// spread of an explicit, feasibility-repaired copy, never a certified lower
/// bound.
struct SpreadEstimate {
  bool feasible = false;
  double c_estimate = 0.0;
  RigidMotion best_motion = RigidMotion::identity(1);
  Configuration lifted_target = Configuration(Matrix::Zero(1, 1));
  std::size_t ambient_dim = 0;
  double meb_radius = 0.0;
  std::size_t restarts = 0;
  std::size_t feasible_restarts = 0;
  std::size_t evaluations = 0;
  std::optional<double> oracle_value;
  bool polished_from_oracle = false;

  /// apply_motion(lifted_target, best_motion).
  Configuration placement() const;
};

/// Multi-start penalised Nelder-Mead over rotations Q0 * exp(S(theta)) and
/// translations. Infeasible problems return feasible == false. Throws
/// NonConvergence if no restart reaches penalty feasibility.
SpreadEstimate estimate_c(const SpreadProblem& p, const SpreadOptions& opts = {});

struct OracleResult {
  double min_spread = 0.0;
  std::size_t samples = 0;
  std::size_t best_index = 0;
  RigidMotion best_motion = RigidMotion::identity(1);
};

/// Minimum spread over `n_samples` random feasible copies. Throws
/// EmptySample for n_samples == 0 and Infeasible when no copy fits.
OracleResult sample_spread_oracle_detailed(const SpreadProblem& p, std::size_t n_samples,
                                           std::uint64_t seed, unsigned threads = 0);

double sample_spread_oracle(const SpreadProblem& p, std::size_t n_samples, std::uint64_t seed);

}  // namespace dramsey
