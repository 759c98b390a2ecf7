/* SPDX-License-Identifier: Apache-2.0
 *
 * gendock — Dirichlet-to-Neumann operator and linearized free-surface
 * evolution on a planar wedge of interior angle alpha in (0, pi].
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed through these functions; fallible calls return gd_status and
 * leave a detail message readable via gd_last_error() (thread local). Arrays
 * are caller-allocated; lengths derive from the grid (n_r surface nodes,
 * n_r * n_theta field nodes, row-major with theta fastest).
 */
#ifndef GENDOCK_H
#define GENDOCK_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gd_status {
  GD_OK = 0,
  GD_ERR_INVALID_ARGUMENT = 1, /* bad sizes, ranges, or configuration */
  GD_ERR_DOMAIN = 2,           /* input outside a function's domain */
  GD_ERR_PRECONDITION = 3,     /* documented precondition violated */
  GD_ERR_SINGULAR = 4,         /* direct solver hit a zero pivot */
  GD_ERR_POSITIVITY = 5,       /* operator spectrum negative beyond roundoff */
  GD_ERR_NO_CONVERGENCE = 6,   /* eigensolver iteration cap exceeded */
  GD_ERR_INTERNAL = 7
} gd_status;

const char* gd_status_name(gd_status status);
const char* gd_last_error(void);
const char* gd_version(void);

/* ---- wedge geometry ---------------------------------------------------- */

typedef struct gd_wedge gd_wedge;

gd_status gd_wedge_create(double alpha, gd_wedge** out);
void gd_wedge_destroy(gd_wedge* wedge);
double gd_wedge_alpha(const gd_wedge* wedge);
double gd_wedge_corner_exponent(const gd_wedge* wedge); /* pi / (2 alpha) */
void gd_wedge_gamma2_normal(const gd_wedge* wedge, double* nu1, double* nu2);

gd_status gd_to_polar(double x1, double x2, double* r, double* theta);
void gd_from_polar(double r, double theta, double* x1, double* x2);
void gd_rotate_to_gamma2_frame(double x1, double x2, double alpha,
                               double* y1, double* y2);

/* Flux convention on the free surface: -1 applied to (1/r) du/dtheta at
 * theta = 0, i.e. the derivative along the outward normal of the fluid
 * wedge. This is the sign that makes the operator below nonnegative. */
int gd_gamma1_flux_sign(void);
const char* gd_gamma1_flux_description(void);

/* ---- separated harmonic modes ------------------------------------------ */

gd_status gd_mode_exponent(int n, double alpha, double* mu);
gd_status gd_sine_mode_eval(int n, double alpha, double r, double theta,
                            double* value);
gd_status gd_cosine_mode_eval(double mu, double alpha, double r, double theta,
                              double* value);
/* Exact (trace, flux) pair of the cosine mode on the surface. */
gd_status gd_cosine_mode_dtn(double mu, double alpha, double r,
                             double* f, double* lambda_f);

/* ---- log-radial grid ---------------------------------------------------- */

typedef struct gd_grid gd_grid;

gd_status gd_grid_create(const gd_wedge* wedge, double r_min, double r_max,
                         int n_r, int n_theta, gd_grid** out);
void gd_grid_destroy(gd_grid* grid);
int gd_grid_n_r(const gd_grid* grid);
int gd_grid_n_theta(const gd_grid* grid);
void gd_grid_radii(const gd_grid* grid, double* out /* n_r */);
void gd_grid_thetas(const gd_grid* grid, double* out /* n_theta */);
void gd_grid_surface_weights(const gd_grid* grid, double* out /* n_r */);

/* ---- mixed Dirichlet/Neumann solve -------------------------------------- */

typedef struct gd_field gd_field;

enum { GD_ARC_ROBIN_ASYMPTOTIC = 0, GD_ARC_EXACT_DIRICHLET = 1 };

/* f: n_r surface values; inner/outer: n_theta arc values for
 * GD_ARC_EXACT_DIRICHLET, ignored (may be NULL) for the Robin closure. */
gd_status gd_solve_mixed_bvp(const gd_wedge* wedge, const gd_grid* grid,
                             const double* f, int arc_kind,
                             const double* inner, const double* outer,
                             gd_field** out);
void gd_field_destroy(gd_field* field);
gd_status gd_field_values(const gd_field* field, double* out /* n_r*n_theta */);
double gd_field_residual(const gd_field* field);
gd_status gd_field_gamma1_flux(const gd_field* field, double* out /* n_r */);
double gd_field_dirichlet_energy(const gd_field* field);

/* ---- Dirichlet-to-Neumann operator -------------------------------------- */

typedef struct gd_dtn gd_dtn;

/* n_threads = 0 picks a default; any value yields bitwise identical output. */
gd_status gd_dtn_assemble(const gd_wedge* wedge, const gd_grid* grid,
                          int n_threads, gd_dtn** out);
void gd_dtn_destroy(gd_dtn* dtn);
int gd_dtn_size(const gd_dtn* dtn);
double gd_dtn_asymmetry(const gd_dtn* dtn);
double gd_dtn_lambda_min_raw(const gd_dtn* dtn);
int gd_dtn_clamped_count(const gd_dtn* dtn);
gd_status gd_dtn_eigenvalues(const gd_dtn* dtn, double* out /* n_r */);
gd_status gd_dtn_matrix(const gd_dtn* dtn, double* out /* n_r*n_r */);
gd_status gd_dtn_apply(const gd_dtn* dtn, const double* f, double* out);
/* Action of the symmetrized core (the one the propagators use). */
gd_status gd_dtn_apply_symmetrized(const gd_dtn* dtn, const double* f,
                                   double* out);
gd_status gd_dtn_quadratic_form(const gd_dtn* dtn, const double* f,
                                double* out);

/* ---- time evolution ------------------------------------------------------ */

/* c = cos(t sqrt(z)), s = sin(t sqrt(z))/sqrt(z), series-guarded near z = 0. */
gd_status gd_phi_functions(double z, double t, double* c, double* s);

typedef struct gd_forcing gd_forcing;

gd_status gd_forcing_none(gd_forcing** out);
gd_status gd_forcing_gaussian(double amplitude, double center, double width,
                              double t_center, double t_width,
                              gd_forcing** out);
/* rows: n_times x n_r samples of P_t, row-major, linear in t between rows. */
gd_status gd_forcing_tabulated(const double* times, int n_times,
                               const double* rows, int n_r, gd_forcing** out);
void gd_forcing_destroy(gd_forcing* forcing);

gd_status gd_propagate_homogeneous(const gd_dtn* dtn, double g,
                                   const double* v0, const double* v1,
                                   double t, double* v, double* v_t);
gd_status gd_duhamel(const gd_dtn* dtn, double g, const gd_forcing* forcing,
                     double t, int n_sub, double* v, double* v_t);

typedef struct gd_trajectory gd_trajectory;

gd_status gd_simulate(const gd_dtn* dtn, double g, double t_final,
                      double dt_out, int n_sub, const double* eta0,
                      const double* v0, const gd_forcing* forcing,
                      gd_trajectory** out);
void gd_trajectory_destroy(gd_trajectory* traj);
int gd_trajectory_count(const gd_trajectory* traj);
double gd_trajectory_time(const gd_trajectory* traj, int m);
gd_status gd_trajectory_state(const gd_trajectory* traj, int m, double* v,
                              double* v_t, double* eta /* any may be NULL */);
double gd_trajectory_energy(const gd_trajectory* traj, int m);
double gd_trajectory_apriori_lhs(const gd_trajectory* traj, int m);
double gd_trajectory_apriori_rhs(const gd_trajectory* traj);
int gd_trajectory_apriori_pass(const gd_trajectory* traj);

/* ---- corner condition ----------------------------------------------------- */

typedef struct gd_corner_report {
  double alpha;
  double s;
  double lambda1_re, lambda1_im;
  double lambda2_re, lambda2_im;
  double mu1_re, mu1_im;
  double mu2_re, mu2_im;
  double beta1, beta2;
  double b20_re, b20_im;
  double tau_min, tau_max;
  int n_samples;
  double min_abs_m0;
  int pass;
  int m1, m2; /* boundary operator degrees, fixed (0, 1) */
} gd_corner_report;

gd_status gd_corner_check(double alpha, double s, double tau_max,
                          int n_samples, gd_corner_report* out);
gd_status gd_corner_profile(double alpha, double s, double tau_max,
                            int n_samples, double* tau_out,
                            double* abs_m0_out);
gd_status gd_betas(double alpha, double* beta1, double* beta2);
gd_status gd_b20(double alpha, double* re, double* im);
gd_status gd_m0(double z_re, double z_im, double alpha, double* re, double* im);

/* ---- reference computations ----------------------------------------------- */

/* Quarter-plane cross-check via even reflection and the |xi| multiplier on a
 * uniform grid of n nodes spanning [x_min, x_max]. */
gd_status gd_reflection_dtn_quarter_plane(double x_min, double x_max, int n,
                                          const double* f, double* out);
gd_status gd_gaussian_bump(const double* nodes, int n, double center,
                           double width, double amplitude, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GENDOCK_H */
