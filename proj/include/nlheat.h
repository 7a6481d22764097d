/* nlheat: radial non-local quadratic heat model, matrix convolution kernels,
 * power-integral inequality verification, and threshold algebra behind a
 * C ABI.  All handles are opaque; every fallible call returns nlh_status and
 * leaves a human-readable message in nlh_last_error_message() on failure.
 * Out-parameters are written only on NLH_OK unless a function documents
 * otherwise.  Handles are freed by their matching *_free function. */

#ifndef NLHEAT_H
#define NLHEAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(NLHEAT_BUILD) && defined(__GNUC__)
#define NLHEAT_API __attribute__((visibility("default")))
#else
#define NLHEAT_API
#endif

typedef enum nlh_status {
  NLH_OK = 0,
  NLH_EINVAL = 1,      /* precondition violated */
  NLH_ESINGULAR = 2,   /* kernel evaluated at v = 0 */
  NLH_EDEGENERATE = 3, /* ratio undefined (zero field / vanishing rhs) */
  NLH_ERESOURCE = 4,   /* desk-scale guard hit (N^6 cap, step budget) */
  NLH_ESTEP = 5,       /* time step violates the stability bound */
  NLH_ERANGE = 6,      /* parameter outside the admissible window */
  NLH_EBOUNDARY = 7,   /* solution reached r_max; truncation not inert */
  NLH_EPOSITIVITY = 8, /* negative undershoot beyond clamping tolerance */
  NLH_EBLOWUP = 9,     /* blowup signal (max u > 1e12 x initial, or NaN) */
  NLH_EINTERNAL = 10
} nlh_status;

typedef struct nlh_grid nlh_grid;
typedef struct nlh_field nlh_field;
typedef struct nlh_kernel nlh_kernel;
typedef struct nlh_series nlh_series;

NLHEAT_API const char* nlh_version(void);
NLHEAT_API const char* nlh_status_name(nlh_status s);
/* Thread-local message from the most recent failing call. */
NLHEAT_API const char* nlh_last_error_message(void);

/* ---- radial grids: cell-centered, uniform, r_i = (i + 1/2) dr ---- */

NLHEAT_API nlh_status nlh_grid_create(double r_max, int n, nlh_grid** out);
NLHEAT_API void nlh_grid_free(nlh_grid* g);
NLHEAT_API int nlh_grid_size(const nlh_grid* g);
NLHEAT_API double nlh_grid_r_max(const nlh_grid* g);
NLHEAT_API double nlh_grid_spacing(const nlh_grid* g);
NLHEAT_API nlh_status nlh_grid_nodes(const nlh_grid* g, double* out, size_t len);

/* ---- nonnegative radial fields sampled on a grid ---- */

NLHEAT_API nlh_status nlh_field_from_values(const nlh_grid* g, const double* values, size_t len,
                                            nlh_field** out);
NLHEAT_API nlh_status nlh_field_gaussian(const nlh_grid* g, double amplitude, double sigma,
                                         nlh_field** out);
NLHEAT_API nlh_status nlh_field_smoothed_ball(const nlh_grid* g, double amplitude, double radius,
                                              double width, nlh_field** out);
NLHEAT_API nlh_status nlh_field_power_tail(const nlh_grid* g, double amplitude, double s,
                                           nlh_field** out);
NLHEAT_API nlh_status nlh_field_maxwellian(const nlh_grid* g, nlh_field** out);
/* Member `index` of the randomized strictly positive test suite.  Membership
 * depends on (seed, index) only, so longer suites extend shorter ones. */
NLHEAT_API nlh_status nlh_field_suite_member(const nlh_grid* g, uint64_t seed, int index,
                                             nlh_field** out);
NLHEAT_API const char* nlh_suite_family_name(int index);
NLHEAT_API void nlh_field_free(nlh_field* f);
NLHEAT_API int nlh_field_size(const nlh_field* f);
NLHEAT_API nlh_status nlh_field_values(const nlh_field* f, double* out, size_t len);
NLHEAT_API double nlh_field_max(const nlh_field* f);

/* ---- radial operators ---- */

NLHEAT_API nlh_status nlh_integrate_radial(const nlh_field* f, double* out);
NLHEAT_API nlh_status nlh_lp_norm(const nlh_field* f, double p, double* out);
/* Derivative and Laplacian may be signed, so they fill raw arrays. */
NLHEAT_API nlh_status nlh_radial_derivative(const nlh_field* f, double* out, size_t len);
NLHEAT_API nlh_status nlh_radial_laplacian(const nlh_field* f, double* out, size_t len);
NLHEAT_API nlh_status nlh_newton_potential(const nlh_field* f, nlh_field** out);

/* ---- matrix kernels b^{ij}(v) ---- */

NLHEAT_API nlh_status nlh_kernel_coulomb(nlh_kernel** out);
NLHEAT_API nlh_status nlh_kernel_landau(double L, nlh_kernel** out);
NLHEAT_API void nlh_kernel_free(nlh_kernel* k);
/* out is row-major 3x3. */
NLHEAT_API nlh_status nlh_kernel_evaluate(const nlh_kernel* k, const double v[3], double out[9]);
NLHEAT_API double nlh_kernel_homogeneity_degree(const nlh_kernel* k);
NLHEAT_API nlh_status nlh_kernel_check_evenness_psd(const nlh_kernel* k, int n_samples,
                                                    uint64_t seed,
                                                    double* max_evenness_violation,
                                                    double* min_quadratic_form);
/* Quadrature of -int b^{ij}(x-y) d_i d_j phi(y) dy for the Gaussian bump
 * phi(y) = exp(-|y - phi_center|^2); approximates phi(x). */
NLHEAT_API nlh_status nlh_kernel_check_delta_identity(const nlh_kernel* k, const double x[3],
                                                      const double phi_center[3],
                                                      double box_half_width, int n_per_axis,
                                                      double* out);

/* ---- inequality functionals ---- */

typedef struct nlh_functional_report {
  double p;
  double lhs;
  double rhs;
  double ratio;
  char grid_meta[128];
} nlh_functional_report;

NLHEAT_API nlh_status nlh_lhs_power_integral(const nlh_field* g, double p, double* out);
NLHEAT_API nlh_status nlh_rhs_coulomb(const nlh_field* g, double p, double* out);
NLHEAT_API nlh_status nlh_rhs_matrix_kernel_3d(const nlh_field* g, double p, const nlh_kernel* k,
                                               double box_half_width, int n_per_axis,
                                               double* out);
NLHEAT_API nlh_status nlh_inequality_ratio(const nlh_field* g, double p,
                                           nlh_functional_report* out);
NLHEAT_API nlh_status nlh_inequality_ratio_3d(const nlh_field* g, double p, const nlh_kernel* k,
                                              double box_half_width, int n_per_axis,
                                              nlh_functional_report* out);
NLHEAT_API nlh_status nlh_maxwellian_sharpness(double p, double box_half_width, int n_per_axis,
                                               double* out);
NLHEAT_API nlh_status nlh_lp_production_rate(const nlh_field* u, double p, double alpha,
                                             double* out);

/* ---- threshold algebra ---- */

typedef struct nlh_threshold_result {
  double alpha;
  double p_star;
  double gamma;
  double q_max;
} nlh_threshold_result;

NLHEAT_API nlh_status nlh_threshold_h(double p, double* out);
NLHEAT_API nlh_status nlh_monotonicity_coefficient(double p, double alpha, double* out);
NLHEAT_API nlh_status nlh_admissible_gamma(double alpha, nlh_threshold_result* out);
NLHEAT_API void nlh_decay_q_range(double* q_min_exclusive, double* q_max_inclusive);

/* ---- evolution ---- */

typedef struct nlh_evolve_config {
  double alpha;
  double t_end;
  double cfl;              /* in (0, 1/2] */
  double record_interval;  /* <= 0 means t_end / 200 */
  const double* diag_ps;   /* exponents tracked as lp_<p> columns */
  size_t n_diag_ps;
  long max_steps;          /* <= 0 means the default guard of 10^7 */
} nlh_evolve_config;

/* rhs may be signed; raw array out. */
NLHEAT_API nlh_status nlh_rhs_model(const nlh_field* u, double alpha, double* out, size_t len);
NLHEAT_API nlh_status nlh_step(const nlh_field* u, double alpha, double dt, nlh_field** out,
                               long* clamped);
/* Returns NLH_OK, or NLH_EBLOWUP with *out still valid: the series then
 * carries the records up to the hit together with the blowup time. */
NLHEAT_API nlh_status nlh_evolve(const nlh_field* u0, const nlh_evolve_config* cfg,
                                 nlh_series** out);
NLHEAT_API void nlh_series_free(nlh_series* s);
NLHEAT_API long nlh_series_count(const nlh_series* s);
NLHEAT_API size_t nlh_series_tracked_count(const nlh_series* s);
NLHEAT_API nlh_status nlh_series_tracked_ps(const nlh_series* s, double* out, size_t len);
/* name is one of "t", "mass", "l2sq", "accumulated_l2", "max_u". */
NLHEAT_API nlh_status nlh_series_column(const nlh_series* s, const char* name, double* out,
                                        size_t len);
NLHEAT_API nlh_status nlh_series_lp_column(const nlh_series* s, size_t p_index, double* out,
                                           size_t len);
NLHEAT_API int nlh_series_blowup(const nlh_series* s, double* time_out);
NLHEAT_API long nlh_series_clamp_count(const nlh_series* s);
NLHEAT_API long nlh_series_node_steps(const nlh_series* s);
NLHEAT_API long nlh_series_steps(const nlh_series* s);
NLHEAT_API double nlh_series_radial_uptick(const nlh_series* s);
NLHEAT_API nlh_status nlh_series_conservation_residual(const nlh_series* s, double alpha,
                                                       double* out);
NLHEAT_API nlh_status nlh_series_monotonicity_report(const nlh_series* s, double p, double* out);
/* CSV text with columns t, mass, l2sq, accumulated_l2, max_u, lp_<p>...;
 * free with nlh_string_free. */
NLHEAT_API nlh_status nlh_series_csv(const nlh_series* s, char** out);
NLHEAT_API void nlh_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* NLHEAT_H */
