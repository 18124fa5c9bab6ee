#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dramsey/geom.hpp"

namespace dramsey {

/// Colouring of the ball of radius `radius` by concentric shells of width
/// `shell_width`: a point gets floor(|x| / c). Uses floor(r / c) + 1 colours.
class ShellColoring {
 public:
  ShellColoring(double shell_width, double radius);

  double shell_width() const noexcept { return shell_width_; }
  double radius() const noexcept { return radius_; }
  std::int64_t num_colors() const noexcept { return num_colors_; }

  std::int64_t color(const Eigen::Ref<const Vector>& x) const;

 private:
  double shell_width_;
  double radius_;
  std::int64_t num_colors_;
};

std::int64_t shell_color(const Eigen::Ref<const Vector>& x, double c);
std::int64_t num_colors(double r, double c);

struct ColoredConfiguration {
  Configuration configuration;
  std::vector<std::int64_t> colors;

  /// Throws InvalidArgument on length mismatch or negative colours.
  void validate() const;
};

ColoredConfiguration color_configuration(const Configuration& c, double shell_width);

struct FalsifyReport {
  std::size_t samples = 0;
  std::size_t monochromatic = 0;
  double min_spread = 0.0;
  std::int64_t min_color_span = 0;
  std::int64_t num_colors = 0;
  double radius = 0.0;
  double shell_width = 0.0;
  std::uint64_t seed = 0;
  std::size_t ambient_dim = 0;
  /// First sample index that produced a monochromatic copy, if any.
  std::optional<std::size_t> first_violation;
  bool vacuous() const noexcept { return samples == 0; }
};

/// Monte-Carlo search for monochromatic copies of `a` under the shell
/// colouring of the origin-centred ball of radius r in R^D (D = 0 picks
/// affine_dimension(a) + 1). Throws Infeasible when no copy fits.
FalsifyReport falsify_coloring(const Configuration& a, double r, double c, std::size_t n_samples,
                               std::uint64_t seed, std::size_t ambient_dim = 0,
                               unsigned threads = 0);

inline constexpr std::size_t kMonochromaticSearchBudget = 20;

/// Indices of a same-coloured subset of `b` congruent to `a` (matched in the
/// order of a's points), or nullopt. tol <= 0 selects 1e-6 * diam(a).
/// Throws BudgetExceeded for |b| > 20.
std::optional<std::vector<std::size_t>> find_monochromatic_copy(const ColoredConfiguration& b,
                                                                const Configuration& a,
                                                                double tol = 0.0);

}  // namespace dramsey
