// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit status if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "dramsey/coloring.hpp"
#include "dramsey/constructions.hpp"
#include "dramsey/obstruction.hpp"
#include "dramsey/spheres.hpp"
#include "dramsey/spread.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace dramsey;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;  // <= 0: no limit
  std::function<void(Outcome&)> body;
};

std::string num(double v) {
  std::ostringstream ss;
  ss.precision(10);
  ss << v;
  return ss.str();
}

Configuration tri150() { return obtuse_triangle(150.0, 1.0); }

// Mixture of point clouds that stress different regimes of the bounds:
// Gaussian blobs, cube samples, flat sets embedded in higher dimension and
// perturbed regular simplices (which nearly attain Jung's bound).
Configuration random_cloud(std::mt19937_64& gen, int dim, int n, int kind) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Matrix m(dim, n);
  switch (kind % 4) {
    case 0:
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < dim; ++i) m(i, j) = normal(gen);
      break;
    case 1:
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < dim; ++i) m(i, j) = unif(gen);
      break;
    case 2: {
      const int flat = 1 + static_cast<int>(gen() % static_cast<unsigned>(dim));
      const Matrix basis = oracle::random_points(gen, dim, flat);
      const Matrix coeffs = oracle::random_points(gen, flat, n);
      m = basis * coeffs;
      break;
    }
    default: {
      const auto s = regular_simplex(static_cast<std::size_t>(dim));
      for (int j = 0; j < n; ++j) {
        m.col(j) = s.point(static_cast<std::size_t>(j % (dim + 1)));
        for (int i = 0; i < dim; ++i) m(i, j) += 1e-3 * normal(gen);
      }
      break;
    }
  }
  return Configuration(m);
}

void ac1(Outcome& o) {
  double worst = 0.0;
  for (std::size_t d = 1; d <= 8; ++d) {
    const double got = circumradius(regular_simplex(d));
    const double want = std::sqrt(static_cast<double>(d) / (2.0 * d + 2.0));
    worst = std::max(worst, std::abs(got - want));
    o.require(std::abs(got - want) <= 1e-9, "d=" + std::to_string(d));
  }
  o.detail << "max |circ - sqrt(d/(2d+2))| = " << num(worst);
}

void ac2(Outcome& o) {
  std::mt19937_64 gen(20240601);
  double worst_slack = -1e300;
  for (int trial = 0; trial < 1000; ++trial) {
    const int dim = 1 + static_cast<int>(gen() % 6);
    const int n = 1 + static_cast<int>(gen() % 12);
    const auto c = random_cloud(gen, dim, n, trial);
    const double meb = min_enclosing_ball(c, static_cast<std::uint64_t>(trial)).radius;
    const double bound = jung_bound(c);
    worst_slack = std::max(worst_slack, meb - bound);
    o.require(meb <= bound + 1e-9, "trial " + std::to_string(trial));
  }
  o.detail << "1000 sets, max (MEB - Jung bound) = " << num(worst_slack);
}

void ac3(Outcome& o) {
  std::mt19937_64 gen(777);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = 1 + static_cast<int>(gen() % 3);
    const int n = 1 + static_cast<int>(gen() % 10);
    const auto c = random_cloud(gen, dim, n, trial);
    const double welzl_r = min_enclosing_ball(c, static_cast<std::uint64_t>(trial)).radius;
    const double brute = oracle::brute_force_meb_radius(c.points());
    worst = std::max(worst, std::abs(welzl_r - brute));
    o.require(std::abs(welzl_r - brute) <= 1e-9, "trial " + std::to_string(trial));
  }
  o.detail << "500 sets, max |Welzl - enumeration| = " << num(worst);
}

void ac4(Outcome& o) {
  int obstructed = 0;
  for (int alpha = 91; alpha <= 179; ++alpha) {
    const auto closed = classify_triangle(alpha, 1.0);
    const auto geometric = obstruction_verdict(obtuse_triangle(alpha, 1.0));
    const std::string tag = "alpha=" + std::to_string(alpha);
    o.require(closed.status == geometric.status, tag + " classifiers disagree");
    const bool expect = alpha > 135;
    o.require((closed.status == VerdictStatus::NotDiameterRamsey) == expect, tag + " threshold");
    if (closed.status == VerdictStatus::NotDiameterRamsey) ++obstructed;
  }
  const double r135 = triangle_circumradius(1.0, 135.0);
  o.require(std::abs(r135 - 1.0 / std::sqrt(2.0)) <= 1e-12, "circumradius at 135");
  o.detail << obstructed << " of 89 angles obstructed; |R(135) - 1/sqrt2| = "
           << num(std::abs(r135 - 1.0 / std::sqrt(2.0)));
}

void ac5(Outcome& o) {
  double worst_measure = 0.0;
  for (std::size_t d = 2; d <= 6; ++d) {
    double prev_apex_gap = 1e300;
    for (double delta : {1e-2, 1e-3, 1e-4}) {
      const std::string tag = "d=" + std::to_string(d) + " delta=" + num(delta);
      const auto s = cor3_simplex(d, delta);
      const SimplexSpec spec{d, delta};
      const double r = std::sqrt(0.5 + delta);
      for (std::size_t i = 0; i < s.size(); ++i) {
        o.require(std::abs(s.point(i).norm() - r) <= 1e-9, tag + " norm");
      }
      o.require(circumradius(s) > 1.0 / std::sqrt(2.0), tag + " circumradius");
      const double apex_sq_formula = 1.0 + 2.0 * delta - 2.0 * r * spec.a();
      for (std::size_t i = 0; i < d; ++i) {
        const double got = (s.point(i) - s.point(d)).squaredNorm();
        o.require(std::abs(got - apex_sq_formula) <= 1e-9, tag + " apex distance");
      }
      const double limit_gap =
          std::abs(apex_sq_formula - (1.0 - 1.0 / std::sqrt(static_cast<double>(d))));
      o.require(limit_gap <= 10.0 * delta, tag + " apex limit");
      o.require(limit_gap < prev_apex_gap, tag + " apex convergence");
      prev_apex_gap = limit_gap;
      const double binom = (d + 1.0) * d / 2.0;
      const double mgap =
          std::abs(almost_regular_measure(s) - std::sqrt(static_cast<double>(d)) / binom);
      worst_measure = std::max(worst_measure, mgap / delta);
      o.require(mgap <= 10.0 * delta, tag + " measure limit");
    }
  }
  o.detail << "15 simplices; max |measure - sqrt(d)/binom| / delta = " << num(worst_measure);
}

double g_c_at_095 = 0.0;

void ac6(Outcome& o) {
  const SpreadProblem p{tri150(), 0.95};
  const auto est = estimate_c(p);
  o.require(est.feasible, "r=0.95 feasible");
  g_c_at_095 = est.c_estimate;
  const double sampled = sample_spread_oracle(p, 1000000, 12345);
  const double rel = std::abs(sampled - est.c_estimate) / est.c_estimate;
  o.require(est.c_estimate > 1e-3, "c(0.95) > 1e-3");
  o.require(rel <= 0.2, "oracle agreement within 20%");

  const auto above = estimate_c({tri150(), 1.05});
  o.require(above.feasible && above.c_estimate <= 1e-6, "c(1.05) <= 1e-6");
  const auto below = estimate_c({tri150(), 0.4});
  o.require(!below.feasible, "r=0.4 infeasible");
  o.detail << "c(0.95) = " << num(est.c_estimate) << ", oracle(1e6) = " << num(sampled)
           << " (rel diff " << num(rel) << "), c(1.05) = " << num(above.c_estimate)
           << ", r=0.4 feasible=" << below.feasible;
}

void ac7(Outcome& o) {
  double prev = 1e300;
  std::ostringstream values;
  for (double r : {0.55, 0.65, 0.75, 0.85, 0.95}) {
    const double c = estimate_c({tri150(), r}).c_estimate;
    o.require(c <= prev + 1e-6, "r=" + num(r));
    values << num(c) << " ";
    prev = c;
  }
  o.detail << "c(r) for r=0.55..0.95: " << values.str();
}

void ac8(Outcome& o) {
  if (g_c_at_095 <= 0.0) g_c_at_095 = estimate_c({tri150(), 0.95}).c_estimate;
  const double c = g_c_at_095;
  const auto rep = falsify_coloring(tri150(), 0.95, c, 100000, 2024);
  o.require(rep.num_colors == static_cast<std::int64_t>(std::floor(0.95 / c)) + 1, "k");
  o.require(rep.samples == 100000, "sample count");
  o.require(rep.monochromatic == 0, "no monochromatic copies");
  const Configuration eq(2, {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}});
  const auto control = falsify_coloring(eq, 0.6, 0.01, 100000, 2024);
  o.require(control.monochromatic >= 1, "control finds a copy");
  o.detail << "k = " << rep.num_colors << ", monochromatic = " << rep.monochromatic
           << ", min spread = " << num(rep.min_spread)
           << "; control monochromatic = " << control.monochromatic;
}

void ac9(Outcome& o) {
  const double h = std::sqrt(3.0) / 2.0;
  std::vector<Configuration> sets = {
      // Regular hexagon with unit side.
      Configuration(2, {{1, 0}, {0.5, h}, {-0.5, h}, {-1, 0}, {-0.5, -h}, {0.5, -h}}),
      // 2 x 3 unit grid.
      Configuration(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}}),
      // Triangular lattice patch of side 2.
      Configuration(2, {{0, 0}, {1, 0}, {2, 0}, {0.5, h}, {1.5, h}, {1, 2 * h}}),
      // Unit square with two apexes of equilateral triangles on opposite sides.
      Configuration(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, -h}, {0.5, 1 + h}}),
      // Regular unit-side pentagon plus its centre.
      [] {
        const double rr = 1.0 / (2.0 * std::sin(M_PI / 5.0));
        std::vector<std::vector<double>> rows;
        for (int k = 0; k < 5; ++k) {
          rows.push_back({rr * std::cos(2 * M_PI * k / 5), rr * std::sin(2 * M_PI * k / 5)});
        }
        rows.push_back({0, 0});
        return Configuration(2, rows);
      }(),
      // Right-angle and 120-degree gadgets mixed together.
      Configuration(2, {{0, 0}, {1, 0}, {0, 1}, {-0.5, h}, {1, 1}, {-1, 0}}),
  };
  const std::vector<Configuration> targets = {
      Configuration(2, {{0, 0}, {1, 0}, {0.5, h}}),
      Configuration(2, {{0, 0}, {1, 0}, {0, 1}}),
      Configuration(2, {{0, 0}, {1, 0}, {1.5, h}}),
  };
  int cases = 0;
  int found = 0;
  for (const auto& b : sets) {
    for (unsigned mask = 0; mask < 64; ++mask) {
      std::vector<std::int64_t> colors(6);
      for (int i = 0; i < 6; ++i) colors[i] = (mask >> i) & 1u;
      for (const auto& a : targets) {
        const bool naive = oracle::naive_monochromatic_copy(b.points(), colors, a.points(),
                                                            1e-6 * diameter(a));
        const auto got = find_monochromatic_copy({b, colors}, a);
        o.require(naive == got.has_value(), "case " + std::to_string(cases));
        if (got) {
          // The witness must itself be monochromatic and congruent.
          Matrix chosen(2, a.size());
          for (std::size_t i = 0; i < a.size(); ++i) {
            chosen.col(static_cast<Eigen::Index>(i)) = b.point((*got)[i]);
            o.require(colors[(*got)[i]] == colors[(*got)[0]], "witness colour");
          }
          o.require(is_congruent(Configuration(chosen), a, 1e-6), "witness congruence");
          ++found;
        }
        ++cases;
      }
    }
  }
  o.detail << cases << " coloured instances, " << found << " with a monochromatic copy";
}

// Compares two reports: discrete fields exactly, numbers within 1e-9.
bool same_report(const json& a, const json& b, const std::string& path, std::string& why) {
  if (a.is_number() && b.is_number()) {
    const double x = a.get<double>();
    const double y = b.get<double>();
    if ((std::isnan(x) && std::isnan(y)) || std::abs(x - y) <= 1e-9) return true;
    why = path;
    return false;
  }
  if (a.type() != b.type()) {
    why = path;
    return false;
  }
  if (a.is_object()) {
    if (a.size() != b.size()) {
      why = path;
      return false;
    }
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (path.empty() && it.key() == "timings") continue;
      if (!b.contains(it.key()) || !same_report(*it, b[it.key()], path + "/" + it.key(), why))
        return false;
    }
    return true;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) {
      why = path;
      return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!same_report(a[i], b[i], path + "/" + std::to_string(i), why)) return false;
    }
    return true;
  }
  if (a != b) why = path;
  return a == b;
}

void ac10(Outcome& o) {
  const std::string tri = cli_runner::temp_path("tri150.json");
  const std::string colored = cli_runner::temp_path("colored.json");
  const std::string csv = cli_runner::temp_path("tri.csv");
  o.require(cli_runner::run("construct obtuse --alpha 150 --out '" + tri + "'").exit_code == 0,
            "construct input");
  o.require(cli_runner::run("construct obtuse --alpha 150 --format csv --out '" + csv + "'")
                    .exit_code == 0,
            "construct csv input");
  o.require(cli_runner::run("color --input '" + tri + "' --shell 0.1 --out '" + colored + "'")
                    .exit_code == 0,
            "colour input");
  const std::string in = " --input '" + tri + "'";
  const std::vector<std::string> commands = {
      "diameter" + in,
      "diameter --format csv --input '" + csv + "'",
      "meb" + in + " --seed 5",
      "circumsphere" + in,
      "jung" + in,
      "obstruct" + in,
      "triangle --alpha 150",
      "conjecture" + in,
      "estimate-c" + in + " --radius 0.95 --seed 42 --restarts 16",
      "estimate-c" + in + " --radius 0.9 --seed 42 --restarts 8 --oracle-samples 5000",
      "oracle" + in + " --radius 0.95 --seed 42 --samples 50000",
      "color" + in + " --shell 0.1 --radius 1",
      "falsify" + in + " --radius 0.95 --shell 0.0085 --seed 42 --samples 50000",
      "find-copy --input '" + colored + "' --target '" + tri + "'",
      "construct regular --dim 4",
      "construct cor3 --dim 3 --delta 0.001",
      "construct obtuse --alpha 150",
  };
  int compared = 0;
  for (const auto& cmd : commands) {
    const auto first = cli_runner::run(cmd);
    const auto second = cli_runner::run(cmd);
    o.require(first.exit_code == 0 && second.exit_code == 0, cmd + " exit status");
    if (first.exit_code != 0 || second.exit_code != 0) continue;
    std::string why;
    o.require(same_report(json::parse(first.out), json::parse(second.out), "", why),
              cmd + " differs at " + why);
    ++compared;
  }
  // Parallel sections must not depend on the worker count either.
  for (const std::string cmd : {"estimate-c" + in + " --radius 0.95 --seed 3 --restarts 12",
                                "oracle" + in + " --radius 0.95 --seed 3 --samples 40000",
                                "falsify" + in + " --radius 0.95 --shell 0.02 --seed 3"}) {
    const auto one = cli_runner::run(cmd + " --threads 1");
    const auto many = cli_runner::run(cmd + " --threads 3");
    o.require(one.exit_code == 0 && many.exit_code == 0, cmd + " exit status");
    if (one.exit_code != 0 || many.exit_code != 0) continue;
    json a = json::parse(one.out);
    json b = json::parse(many.out);
    std::string why;
    o.require(same_report(a["outputs"], b["outputs"], "", why), cmd + " thread dependence " + why);
    ++compared;
  }
  for (const auto& p : {tri, colored, csv}) std::remove(p.c_str());
  o.detail << compared << " command pairs reproduced (13 subcommands)";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "circumradius of regular simplices", 1.0, ac1},
      {"AC2", "Jung bound on 1000 random sets", 10.0, ac2},
      {"AC3", "Welzl versus support enumeration", 0.0, ac3},
      {"AC4", "triangle threshold at 135 degrees", 0.0, ac4},
      {"AC5", "almost-regular simplex family", 0.0, ac5},
      {"AC6", "positive spread constant for the 150-degree triangle", 120.0, ac6},
      {"AC7", "spread constant nonincreasing in r", 0.0, ac7},
      {"AC8", "shell colouring falsification and control", 60.0, ac8},
      {"AC9", "monochromatic search versus enumeration", 0.0, ac9},
      {"AC10", "CLI determinism", 0.0, ac10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0) {
      o.require(secs < c.time_limit_s, "runtime limit " + num(c.time_limit_s) + " s");
    }
    if (!o.pass) ++failures;
    std::printf("%-4s %s  %s (%.2f s): %s\n", c.id.c_str(), o.pass ? "PASS" : "FAIL",
                c.title.c_str(), secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
