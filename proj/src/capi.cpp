#include "dramsey/dramsey.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "dramsey/coloring.hpp"
#include "dramsey/constructions.hpp"
#include "dramsey/error.hpp"
#include "dramsey/geom.hpp"
#include "dramsey/io.hpp"
#include "dramsey/obstruction.hpp"
#include "dramsey/spheres.hpp"
#include "dramsey/spread.hpp"

struct dr_config {
  dramsey::Configuration value;
};

struct dr_spread_estimate {
  dramsey::SpreadEstimate estimate;
  dramsey::SpreadProblem problem;
  dramsey::SpreadOptions options;
};

namespace {

using dramsey::Error;
using dramsey::ErrorCode;

thread_local std::string g_last_error;

dr_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return DR_ERR_INVALID_ARGUMENT;
    case ErrorCode::DomainError: return DR_ERR_DOMAIN;
    case ErrorCode::NonOrthogonal: return DR_ERR_NON_ORTHOGONAL;
    case ErrorCode::NotSpherical: return DR_ERR_NOT_SPHERICAL;
    case ErrorCode::Degenerate: return DR_ERR_DEGENERATE;
    case ErrorCode::NotSimplex: return DR_ERR_NOT_SIMPLEX;
    case ErrorCode::Infeasible: return DR_ERR_INFEASIBLE;
    case ErrorCode::NonConvergence: return DR_ERR_NON_CONVERGENCE;
    case ErrorCode::EmptySample: return DR_ERR_EMPTY_SAMPLE;
    case ErrorCode::BudgetExceeded: return DR_ERR_BUDGET_EXCEEDED;
    case ErrorCode::ParseError: return DR_ERR_PARSE;
    case ErrorCode::IoError: return DR_ERR_IO;
  }
  return DR_ERR_INTERNAL;
}

template <class F>
dr_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return DR_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DR_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DR_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DR_ERR_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(name) + " is null");
}

double tol_or_default(double tol) { return tol > 0.0 ? tol : dramsey::kDefaultTol; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dr_config* wrap(dramsey::Configuration c) { return new dr_config{std::move(c)}; }

void fill_verdict(const dramsey::Verdict& v, dr_verdict* out) {
  out->not_diameter_ramsey = v.status == dramsey::VerdictStatus::NotDiameterRamsey ? 1 : 0;
  out->circumradius = v.circumradius;
  out->diameter = v.diameter;
  out->threshold = v.threshold;
  out->margin = v.margin;
}

dramsey::Format to_format(dr_format f) {
  return f == DR_FORMAT_CSV ? dramsey::Format::Csv : dramsey::Format::Json;
}

void copy_vector(const dramsey::Vector& v, double* out) {
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v(i);
}

}  // namespace

extern "C" {

const char* dr_version(void) { return "0.1.0"; }

const char* dr_last_error(void) { return g_last_error.c_str(); }

const char* dr_status_name(dr_status status) {
  switch (status) {
    case DR_OK: return "Ok";
    case DR_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case DR_ERR_DOMAIN: return "DomainError";
    case DR_ERR_NON_ORTHOGONAL: return "NonOrthogonal";
    case DR_ERR_NOT_SPHERICAL: return "NotSpherical";
    case DR_ERR_DEGENERATE: return "Degenerate";
    case DR_ERR_NOT_SIMPLEX: return "NotSimplex";
    case DR_ERR_INFEASIBLE: return "Infeasible";
    case DR_ERR_NON_CONVERGENCE: return "NonConvergence";
    case DR_ERR_EMPTY_SAMPLE: return "EmptySample";
    case DR_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case DR_ERR_PARSE: return "ParseError";
    case DR_ERR_IO: return "IoError";
    case DR_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void dr_string_free(char* s) { std::free(s); }

dr_status dr_config_create(size_t dim, size_t n, const double* coords, dr_config** out) {
  return guard([&] {
    require(coords, "coords");
    require(out, "out");
    dramsey::Matrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(n));
    for (size_t j = 0; j < n; ++j) {
      for (size_t i = 0; i < dim; ++i) {
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = coords[j * dim + i];
      }
    }
    *out = wrap(dramsey::Configuration(std::move(m)));
  });
}

dr_status dr_config_parse(const char* text, dr_format format, dr_config** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(dramsey::parse_configuration(text, to_format(format)));
  });
}

dr_status dr_config_load(const char* path, dr_format format, dr_config** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(dramsey::parse_configuration(dramsey::read_text_file(path), to_format(format)));
  });
}

void dr_config_destroy(dr_config* c) { delete c; }

size_t dr_config_dim(const dr_config* c) { return c ? c->value.dim() : 0; }

size_t dr_config_size(const dr_config* c) { return c ? c->value.size() : 0; }

dr_status dr_config_coords(const dr_config* c, double* out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    const auto& p = c->value.points();
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      for (Eigen::Index i = 0; i < p.rows(); ++i) out[j * p.rows() + i] = p(i, j);
    }
  });
}

dr_status dr_config_to_json(const dr_config* c, char** out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    *out = dup_string(dramsey::to_json(c->value).dump());
  });
}

dr_status dr_config_to_csv(const dr_config* c, char** out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    *out = dup_string(dramsey::to_csv(c->value));
  });
}

dr_status dr_diameter(const dr_config* c, double* out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    *out = dramsey::diameter(c->value);
  });
}

dr_status dr_distance_matrix(const dr_config* c, double* out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    const auto d = dramsey::distance_matrix(c->value);
    const size_t n = d.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) out[i * n + j] = d(i, j);
    }
  });
}

dr_status dr_affine_dimension(const dr_config* c, double tol, size_t* out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    *out = dramsey::affine_dimension(c->value, tol_or_default(tol));
  });
}

dr_status dr_apply_motion(const dr_config* c, const double* rotation, const double* translation,
                          dr_config** out) {
  return guard([&] {
    require(c, "config");
    require(rotation, "rotation");
    require(translation, "translation");
    require(out, "out");
    const auto d = static_cast<Eigen::Index>(c->value.dim());
    dramsey::Matrix r(d, d);
    dramsey::Vector t(d);
    for (Eigen::Index i = 0; i < d; ++i) {
      t(i) = translation[i];
      for (Eigen::Index j = 0; j < d; ++j) r(i, j) = rotation[i * d + j];
    }
    *out = wrap(dramsey::apply_motion(c->value, dramsey::RigidMotion(std::move(r), std::move(t))));
  });
}

dr_status dr_is_congruent(const dr_config* a, const dr_config* b, double tol, int* out) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = dramsey::is_congruent(a->value, b->value, tol_or_default(tol)) ? 1 : 0;
  });
}

dr_status dr_min_enclosing_ball(const dr_config* c, uint64_t seed, double* center, double* radius) {
  return guard([&] {
    require(c, "config");
    require(radius, "radius");
    const auto ball = dramsey::min_enclosing_ball(c->value, seed);
    if (center) copy_vector(ball.center, center);
    *radius = ball.radius;
  });
}

dr_status dr_circumsphere(const dr_config* c, double tol, double* center, double* radius,
                          double* residual, size_t* hull_dim) {
  return guard([&] {
    require(c, "config");
    const auto s = dramsey::circumsphere(c->value, tol_or_default(tol));
    if (center) copy_vector(s.center, center);
    if (radius) *radius = s.radius;
    if (residual) *residual = s.residual;
    if (hull_dim) *hull_dim = static_cast<size_t>(s.carrier.cols());
  });
}

dr_status dr_circumradius(const dr_config* c, double* out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    *out = dramsey::circumradius(c->value);
  });
}

dr_status dr_is_spherical(const dr_config* c, double tol, int* out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    *out = dramsey::is_spherical(c->value, tol_or_default(tol)) ? 1 : 0;
  });
}

dr_status dr_jung_bound(const dr_config* c, double* out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    *out = dramsey::jung_bound(c->value);
  });
}

dr_status dr_circumcenter_in_hull(const dr_config* c, double tol, int* out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    *out = dramsey::circumcenter_in_hull(c->value, tol_or_default(tol)) ? 1 : 0;
  });
}

dr_status dr_obstruction_verdict(const dr_config* c, double tol, dr_verdict* out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    fill_verdict(dramsey::obstruction_verdict(c->value, tol_or_default(tol)), out);
  });
}

dr_status dr_triangle_circumradius(double a, double alpha_deg, double* out) {
  return guard([&] {
    require(out, "out");
    *out = dramsey::triangle_circumradius(a, alpha_deg);
  });
}

dr_status dr_classify_triangle(double alpha_deg, double a, dr_verdict* out) {
  return guard([&] {
    require(out, "out");
    fill_verdict(dramsey::classify_triangle(alpha_deg, a), out);
  });
}

dr_status dr_conjecture_classification(const dr_config* c, double tol,
                                       int* conjectured_diameter_ramsey) {
  return guard([&] {
    require(c, "config");
    require(conjectured_diameter_ramsey, "out");
    *conjectured_diameter_ramsey =
        dramsey::conjecture_classification(c->value, tol_or_default(tol)) ==
                dramsey::ConjectureLabel::ConjecturedDiameterRamsey
            ? 1
            : 0;
  });
}

void dr_spread_options_default(dr_spread_options* opts) {
  if (opts == nullptr) return;
  const dramsey::SpreadOptions d;
  opts->restarts = d.restarts;
  opts->seed = d.seed;
  opts->tolerance = d.tolerance;
  opts->feasibility_tolerance = d.feasibility_tolerance;
  opts->max_evaluations = d.max_evaluations;
  opts->oracle_samples = d.oracle_samples;
  opts->ambient_dim = 0;
  opts->threads = d.threads;
  opts->penalty_min_exp = 1;
  opts->penalty_max_exp = 6;
}

dr_status dr_spread(const dr_config* c, double* out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    *out = dramsey::spread(c->value);
  });
}

dr_status dr_embedding_feasible(const dr_config* c, double radius, int* out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    *out = dramsey::embedding_feasible(dramsey::SpreadProblem{c->value, radius, 0}) ? 1 : 0;
  });
}

dr_status dr_estimate_c(const dr_config* target, double radius, const dr_spread_options* opts,
                        dr_spread_estimate** out) {
  return guard([&] {
    require(target, "target");
    require(out, "out");
    dr_spread_options o;
    dr_spread_options_default(&o);
    if (opts) o = *opts;
    if (o.penalty_min_exp > o.penalty_max_exp) {
      throw Error(ErrorCode::InvalidArgument, "penalty exponent range is empty");
    }
    dramsey::SpreadOptions so;
    so.restarts = o.restarts;
    so.seed = o.seed;
    so.tolerance = o.tolerance;
    so.feasibility_tolerance = o.feasibility_tolerance;
    so.max_evaluations = o.max_evaluations;
    so.oracle_samples = o.oracle_samples;
    so.threads = o.threads;
    so.penalty_schedule.clear();
    for (int e = o.penalty_min_exp; e <= o.penalty_max_exp; ++e) {
      so.penalty_schedule.push_back(std::pow(10.0, e));
    }
    dramsey::SpreadProblem problem{target->value, radius, o.ambient_dim};
    auto est = dramsey::estimate_c(problem, so);
    *out = new dr_spread_estimate{std::move(est), std::move(problem), std::move(so)};
  });
}

void dr_spread_estimate_destroy(dr_spread_estimate* e) { delete e; }

int dr_spread_estimate_feasible(const dr_spread_estimate* e) {
  return e && e->estimate.feasible ? 1 : 0;
}

double dr_spread_estimate_value(const dr_spread_estimate* e) {
  return e ? e->estimate.c_estimate : std::numeric_limits<double>::quiet_NaN();
}

size_t dr_spread_estimate_dim(const dr_spread_estimate* e) { return e ? e->estimate.ambient_dim : 0; }

size_t dr_spread_estimate_feasible_restarts(const dr_spread_estimate* e) {
  return e ? e->estimate.feasible_restarts : 0;
}

int dr_spread_estimate_oracle(const dr_spread_estimate* e, double* out) {
  if (e == nullptr || !e->estimate.oracle_value) return 0;
  if (out) *out = *e->estimate.oracle_value;
  return 1;
}

dr_status dr_spread_estimate_motion(const dr_spread_estimate* e, double* rotation,
                                    double* translation) {
  return guard([&] {
    require(e, "estimate");
    const auto& m = e->estimate.best_motion;
    const auto d = static_cast<Eigen::Index>(m.dim());
    if (rotation) {
      for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) rotation[i * d + j] = m.rotation()(i, j);
      }
    }
    if (translation) copy_vector(m.translation(), translation);
  });
}

dr_status dr_spread_estimate_placement(const dr_spread_estimate* e, dr_config** out) {
  return guard([&] {
    require(e, "estimate");
    require(out, "out");
    *out = wrap(e->estimate.placement());
  });
}

dr_status dr_spread_estimate_to_json(const dr_spread_estimate* e, char** out) {
  return guard([&] {
    require(e, "estimate");
    require(out, "out");
    *out = dup_string(dramsey::to_json(e->estimate, e->problem, e->options).dump());
  });
}

dr_status dr_sample_spread_oracle(const dr_config* target, double radius, size_t ambient_dim,
                                  size_t n_samples, uint64_t seed, double* out) {
  return guard([&] {
    require(target, "target");
    require(out, "out");
    *out = dramsey::sample_spread_oracle_detailed(
               dramsey::SpreadProblem{target->value, radius, ambient_dim}, n_samples, seed)
               .min_spread;
  });
}

dr_status dr_shell_color(const double* x, size_t dim, double shell_width, int64_t* out) {
  return guard([&] {
    require(x, "x");
    require(out, "out");
    *out = dramsey::shell_color(
        Eigen::Map<const dramsey::Vector>(x, static_cast<Eigen::Index>(dim)), shell_width);
  });
}

dr_status dr_num_colors(double radius, double shell_width, int64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = dramsey::num_colors(radius, shell_width);
  });
}

dr_status dr_color_configuration(const dr_config* c, double shell_width, int64_t* colors) {
  return guard([&] {
    require(c, "config");
    require(colors, "colors");
    const auto colored = dramsey::color_configuration(c->value, shell_width);
    for (size_t i = 0; i < colored.colors.size(); ++i) colors[i] = colored.colors[i];
  });
}

dr_status dr_falsify_coloring(const dr_config* target, double radius, double shell_width,
                              size_t n_samples, uint64_t seed, size_t ambient_dim,
                              dr_falsify_report* out) {
  return guard([&] {
    require(target, "target");
    require(out, "out");
    const auto r = dramsey::falsify_coloring(target->value, radius, shell_width, n_samples, seed,
                                             ambient_dim);
    out->samples = r.samples;
    out->monochromatic = r.monochromatic;
    out->min_spread = r.vacuous() ? std::numeric_limits<double>::quiet_NaN() : r.min_spread;
    out->min_color_span = r.vacuous() ? -1 : r.min_color_span;
    out->num_colors = r.num_colors;
    out->ambient_dim = r.ambient_dim;
    out->vacuous = r.vacuous() ? 1 : 0;
    out->first_violation = r.first_violation ? static_cast<int64_t>(*r.first_violation) : -1;
  });
}

dr_status dr_find_monochromatic_copy(const dr_config* b, const int64_t* colors, const dr_config* a,
                                     double tol, size_t* indices, int* found) {
  return guard([&] {
    require(b, "b");
    require(colors, "colors");
    require(a, "a");
    require(found, "found");
    dramsey::ColoredConfiguration cb{b->value,
                                     std::vector<std::int64_t>(colors, colors + b->value.size())};
    const auto hit = dramsey::find_monochromatic_copy(cb, a->value, tol);
    *found = hit ? 1 : 0;
    if (hit && indices) {
      for (size_t i = 0; i < hit->size(); ++i) indices[i] = (*hit)[i];
    }
  });
}

dr_status dr_colored_config_parse(const char* text, dr_config** config, int64_t** colors,
                                  size_t* n_colors) {
  return guard([&] {
    require(text, "text");
    require(config, "config");
    require(colors, "colors");
    require(n_colors, "n_colors");
    auto parsed = dramsey::parse_colored_configuration_json(text);
    auto* buf = static_cast<int64_t*>(std::malloc(sizeof(int64_t) * parsed.colors.size()));
    if (buf == nullptr) throw std::bad_alloc();
    for (size_t i = 0; i < parsed.colors.size(); ++i) buf[i] = parsed.colors[i];
    *n_colors = parsed.colors.size();
    *colors = buf;
    *config = wrap(std::move(parsed.configuration));
  });
}

void dr_colors_free(int64_t* colors) { std::free(colors); }

dr_status dr_regular_simplex(size_t d, dr_config** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(dramsey::regular_simplex(d));
  });
}

dr_status dr_cor3_simplex(size_t d, double delta, dr_config** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(dramsey::cor3_simplex(d, delta));
  });
}

dr_status dr_obtuse_triangle(double alpha_deg, double a, dr_config** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(dramsey::obtuse_triangle(alpha_deg, a));
  });
}

dr_status dr_almost_regular_measure(const dr_config* c, double* out) {
  return guard([&] {
    require(c, "config");
    require(out, "out");
    *out = dramsey::almost_regular_measure(c->value);
  });
}

dr_status dr_largest_angle(const dr_config* triangle, double* out_deg) {
  return guard([&] {
    require(triangle, "triangle");
    require(out_deg, "out");
    *out_deg = dramsey::largest_angle_deg(triangle->value);
  });
}

}  // extern "C"
