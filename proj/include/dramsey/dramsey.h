/*
 * C interface to libdramsey.
 *
 * Every function returns a dr_status. On failure the thread-local message from
 * dr_last_error() describes the problem; outputs are left untouched. Handles
 * (dr_config, dr_spread_estimate) are opaque and owned by the caller, who
 * releases them with the matching *_destroy function. Strings returned through
 * char** outputs are released with dr_string_free.
 *
 * Coordinates are passed point-major: point i occupies coords[i*dim .. i*dim+dim).
 * Matrices (rotations, distance matrices) are row-major.
 */
#ifndef DRAMSEY_H
#define DRAMSEY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DRAMSEY_BUILDING)
#    define DR_API __declspec(dllexport)
#  else
#    define DR_API __declspec(dllimport)
#  endif
#else
#  define DR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dr_status {
  DR_OK = 0,
  DR_ERR_INVALID_ARGUMENT = 1,
  DR_ERR_DOMAIN = 2,
  DR_ERR_NON_ORTHOGONAL = 3,
  DR_ERR_NOT_SPHERICAL = 4,
  DR_ERR_DEGENERATE = 5,
  DR_ERR_NOT_SIMPLEX = 6,
  DR_ERR_INFEASIBLE = 7,
  DR_ERR_NON_CONVERGENCE = 8,
  DR_ERR_EMPTY_SAMPLE = 9,
  DR_ERR_BUDGET_EXCEEDED = 10,
  DR_ERR_PARSE = 11,
  DR_ERR_IO = 12,
  DR_ERR_INTERNAL = 99
} dr_status;

typedef enum dr_format { DR_FORMAT_JSON = 0, DR_FORMAT_CSV = 1 } dr_format;

typedef struct dr_config dr_config;
typedef struct dr_spread_estimate dr_spread_estimate;

typedef struct dr_verdict {
  int not_diameter_ramsey; /* 1: NotDiameterRamsey, 0: Unknown */
  double circumradius;
  double diameter;
  double threshold;
  double margin;
} dr_verdict;

typedef struct dr_spread_options {
  size_t restarts;
  uint64_t seed;
  double tolerance;
  double feasibility_tolerance;
  size_t max_evaluations;
  size_t oracle_samples;
  size_t ambient_dim; /* 0: affine dimension + 1 */
  unsigned threads;   /* 0: hardware concurrency */
  /* Penalty weights 10^min_exp .. 10^max_exp, one stage per power. */
  int penalty_min_exp;
  int penalty_max_exp;
} dr_spread_options;

typedef struct dr_falsify_report {
  size_t samples;
  size_t monochromatic;
  double min_spread;        /* NaN when vacuous */
  int64_t min_color_span;   /* -1 when vacuous */
  int64_t num_colors;
  size_t ambient_dim;
  int vacuous;
  int64_t first_violation;  /* -1 when none */
} dr_falsify_report;

DR_API const char* dr_version(void);
DR_API const char* dr_last_error(void);
DR_API const char* dr_status_name(dr_status status);
DR_API void dr_string_free(char* s);

/* Configurations. */
DR_API dr_status dr_config_create(size_t dim, size_t n, const double* coords, dr_config** out);
DR_API dr_status dr_config_parse(const char* text, dr_format format, dr_config** out);
DR_API dr_status dr_config_load(const char* path, dr_format format, dr_config** out);
DR_API void dr_config_destroy(dr_config* c);
DR_API size_t dr_config_dim(const dr_config* c);
DR_API size_t dr_config_size(const dr_config* c);
DR_API dr_status dr_config_coords(const dr_config* c, double* out);
DR_API dr_status dr_config_to_json(const dr_config* c, char** out);
DR_API dr_status dr_config_to_csv(const dr_config* c, char** out);

/* Geometry core. */
DR_API dr_status dr_diameter(const dr_config* c, double* out);
DR_API dr_status dr_distance_matrix(const dr_config* c, double* out);
DR_API dr_status dr_affine_dimension(const dr_config* c, double tol, size_t* out);
DR_API dr_status dr_apply_motion(const dr_config* c, const double* rotation,
                                 const double* translation, dr_config** out);
DR_API dr_status dr_is_congruent(const dr_config* a, const dr_config* b, double tol, int* out);

/* Spheres. */
DR_API dr_status dr_min_enclosing_ball(const dr_config* c, uint64_t seed, double* center,
                                       double* radius);
DR_API dr_status dr_circumsphere(const dr_config* c, double tol, double* center, double* radius,
                                 double* residual, size_t* hull_dim);
DR_API dr_status dr_circumradius(const dr_config* c, double* out);
DR_API dr_status dr_is_spherical(const dr_config* c, double tol, int* out);
DR_API dr_status dr_jung_bound(const dr_config* c, double* out);
DR_API dr_status dr_circumcenter_in_hull(const dr_config* c, double tol, int* out);

/* Obstruction. */
DR_API dr_status dr_obstruction_verdict(const dr_config* c, double tol, dr_verdict* out);
DR_API dr_status dr_triangle_circumradius(double a, double alpha_deg, double* out);
DR_API dr_status dr_classify_triangle(double alpha_deg, double a, dr_verdict* out);
/* *conjectured_diameter_ramsey = 1 when the circumcentre lies in the hull. */
DR_API dr_status dr_conjecture_classification(const dr_config* c, double tol,
                                              int* conjectured_diameter_ramsey);

/* Spread. */
DR_API void dr_spread_options_default(dr_spread_options* opts);
DR_API dr_status dr_spread(const dr_config* c, double* out);
DR_API dr_status dr_embedding_feasible(const dr_config* c, double radius, int* out);
/* Infeasible problems succeed with dr_spread_estimate_feasible() == 0. */
DR_API dr_status dr_estimate_c(const dr_config* target, double radius,
                               const dr_spread_options* opts, dr_spread_estimate** out);
DR_API void dr_spread_estimate_destroy(dr_spread_estimate* e);
DR_API int dr_spread_estimate_feasible(const dr_spread_estimate* e);
DR_API double dr_spread_estimate_value(const dr_spread_estimate* e);
DR_API size_t dr_spread_estimate_dim(const dr_spread_estimate* e);
DR_API size_t dr_spread_estimate_feasible_restarts(const dr_spread_estimate* e);
/* Returns 0 and leaves *out alone when the oracle was not run. */
DR_API int dr_spread_estimate_oracle(const dr_spread_estimate* e, double* out);
DR_API dr_status dr_spread_estimate_motion(const dr_spread_estimate* e, double* rotation,
                                           double* translation);
DR_API dr_status dr_spread_estimate_placement(const dr_spread_estimate* e, dr_config** out);
DR_API dr_status dr_spread_estimate_to_json(const dr_spread_estimate* e, char** out);
DR_API dr_status dr_sample_spread_oracle(const dr_config* target, double radius,
                                         size_t ambient_dim, size_t n_samples, uint64_t seed,
                                         double* out);

/* Colouring. */
DR_API dr_status dr_shell_color(const double* x, size_t dim, double shell_width, int64_t* out);
DR_API dr_status dr_num_colors(double radius, double shell_width, int64_t* out);
DR_API dr_status dr_color_configuration(const dr_config* c, double shell_width, int64_t* colors);
DR_API dr_status dr_falsify_coloring(const dr_config* target, double radius, double shell_width,
                                     size_t n_samples, uint64_t seed, size_t ambient_dim,
                                     dr_falsify_report* out);
/* colors has dr_config_size(b) entries; indices receives dr_config_size(a)
 * entries when *found == 1. tol <= 0 selects 1e-6 * diam(a). */
DR_API dr_status dr_find_monochromatic_copy(const dr_config* b, const int64_t* colors,
                                            const dr_config* a, double tol, size_t* indices,
                                            int* found);
DR_API dr_status dr_colored_config_parse(const char* text, dr_config** config, int64_t** colors,
                                         size_t* n_colors);
DR_API void dr_colors_free(int64_t* colors);

/* Constructions. */
DR_API dr_status dr_regular_simplex(size_t d, dr_config** out);
DR_API dr_status dr_cor3_simplex(size_t d, double delta, dr_config** out);
DR_API dr_status dr_obtuse_triangle(double alpha_deg, double a, dr_config** out);
DR_API dr_status dr_almost_regular_measure(const dr_config* c, double* out);
DR_API dr_status dr_largest_angle(const dr_config* triangle, double* out_deg);

#ifdef __cplusplus
}
#endif

#endif /* DRAMSEY_H */
