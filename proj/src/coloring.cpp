#include "dramsey/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "copy_sampler.hpp"
#include "dramsey/error.hpp"
#include "dramsey/spheres.hpp"

namespace dramsey {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::DomainError, std::string(what) + " must be positive and finite");
  }
}

}  // namespace

std::int64_t shell_color(const Eigen::Ref<const Vector>& x, double c) {
  require_positive(c, "shell width");
  return static_cast<std::int64_t>(std::floor(x.norm() / c));
}

std::int64_t num_colors(double r, double c) {
  require_positive(r, "radius");
  require_positive(c, "shell width");
  return static_cast<std::int64_t>(std::floor(r / c)) + 1;
}

ShellColoring::ShellColoring(double shell_width, double radius)
    : shell_width_(shell_width), radius_(radius), num_colors_(dramsey::num_colors(radius, shell_width)) {}

std::int64_t ShellColoring::color(const Eigen::Ref<const Vector>& x) const {
  return shell_color(x, shell_width_);
}

void ColoredConfiguration::validate() const {
  if (colors.size() != configuration.size()) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(configuration.size()) +
                                                " colours, got " + std::to_string(colors.size()));
  }
  for (auto col : colors) {
    if (col < 0) throw Error(ErrorCode::InvalidArgument, "colours must be nonnegative");
  }
}

ColoredConfiguration color_configuration(const Configuration& c, double shell_width) {
  require_positive(shell_width, "shell width");
  std::vector<std::int64_t> colors(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) colors[i] = shell_color(c.point(i), shell_width);
  return ColoredConfiguration{c, std::move(colors)};
}

FalsifyReport falsify_coloring(const Configuration& a, double r, double c, std::size_t n_samples,
                               std::uint64_t seed, std::size_t ambient_dim, unsigned threads) {
  require_positive(c, "shell width");
  const SpreadProblem problem{a, r, ambient_dim};
  const detail::LiftedProblem lp = detail::lift(problem);
  if (!(lp.meb_radius <= r + 1e-9)) {
    throw Error(ErrorCode::Infeasible, "minimum enclosing ball radius " +
                                           std::to_string(lp.meb_radius) + " exceeds " +
                                           std::to_string(r));
  }
  const ShellColoring coloring(c, r);

  FalsifyReport report;
  report.samples = n_samples;
  report.num_colors = coloring.num_colors();
  report.radius = r;
  report.shell_width = c;
  report.seed = seed;
  report.ambient_dim = lp.dim;
  if (n_samples == 0) return report;

  struct Tally {
    std::size_t monochromatic = 0;
    double min_spread = std::numeric_limits<double>::infinity();
    std::int64_t min_span = std::numeric_limits<std::int64_t>::max();
    std::optional<std::size_t> first;
  };
  const Tally total = detail::sample_copies(
      lp, n_samples, seed, threads, Tally{},
      [&](Tally& t, std::size_t i, const detail::CopyDraw& draw) {
        std::int64_t lo = std::numeric_limits<std::int64_t>::max();
        std::int64_t hi = std::numeric_limits<std::int64_t>::min();
        double nmin = std::numeric_limits<double>::infinity();
        double nmax = 0.0;
        for (Eigen::Index k = 0; k < draw.points.cols(); ++k) {
          const double norm = draw.points.col(k).norm();
          const auto col = static_cast<std::int64_t>(std::floor(norm / c));
          lo = std::min(lo, col);
          hi = std::max(hi, col);
          nmin = std::min(nmin, norm);
          nmax = std::max(nmax, norm);
        }
        t.min_spread = std::min(t.min_spread, nmax - nmin);
        t.min_span = std::min(t.min_span, hi - lo);
        if (lo == hi) {
          ++t.monochromatic;
          if (!t.first) t.first = i;
        }
      },
      [](Tally& acc, const Tally& part) {
        acc.monochromatic += part.monochromatic;
        acc.min_spread = std::min(acc.min_spread, part.min_spread);
        acc.min_span = std::min(acc.min_span, part.min_span);
        if (part.first && (!acc.first || *part.first < *acc.first)) acc.first = part.first;
      });

  report.monochromatic = total.monochromatic;
  report.min_spread = total.min_spread;
  report.min_color_span = total.min_span;
  report.first_violation = total.first;
  return report;
}

namespace {

class CopyFinder {
 public:
  CopyFinder(const Matrix& db, const Matrix& da, double tol) : db_(db), da_(da), tol_(tol) {}

  std::optional<std::vector<std::size_t>> search(const std::vector<std::size_t>& pool) {
    pool_ = &pool;
    image_.assign(static_cast<std::size_t>(da_.rows()), 0);
    used_.assign(static_cast<std::size_t>(db_.rows()), false);
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == image_.size()) return true;
    for (std::size_t j : *pool_) {
      if (used_[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        ok = std::abs(da_(static_cast<Eigen::Index>(depth), static_cast<Eigen::Index>(k)) -
                      db_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(image_[k]))) <=
             tol_;
      }
      if (!ok) continue;
      image_[depth] = j;
      used_[j] = true;
      if (extend(depth + 1)) return true;
      used_[j] = false;
    }
    return false;
  }

  const Matrix& db_;
  const Matrix& da_;
  double tol_;
  const std::vector<std::size_t>* pool_ = nullptr;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_monochromatic_copy(const ColoredConfiguration& b,
                                                                const Configuration& a,
                                                                double tol) {
  b.validate();
  if (b.configuration.size() > kMonochromaticSearchBudget) {
    throw Error(ErrorCode::BudgetExceeded,
                "exhaustive search is limited to " + std::to_string(kMonochromaticSearchBudget) +
                    " points, got " + std::to_string(b.configuration.size()));
  }
  if (a.size() > b.configuration.size()) return std::nullopt;
  if (!(tol > 0.0)) tol = 1e-6 * diameter(a);

  std::map<std::int64_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < b.colors.size(); ++i) classes[b.colors[i]].push_back(i);

  const Matrix db = distance_matrix(b.configuration).entries();
  const Matrix da = distance_matrix(a).entries();
  CopyFinder finder(db, da, tol);
  for (const auto& [color, members] : classes) {
    if (members.size() < a.size()) continue;
    if (auto hit = finder.search(members)) return hit;
  }
  return std::nullopt;
}

}  // namespace dramsey
