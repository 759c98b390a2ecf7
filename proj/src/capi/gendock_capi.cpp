// SPDX-License-Identifier: Apache-2.0
//
// extern "C" surface of the shared library: opaque handles over the core,
// exceptions mapped to status codes, detail text in a thread-local buffer.
#include "gendock/gendock.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <string>
#include <vector>

#include "core/corner.hpp"
#include "core/dtn.hpp"
#include "core/errors.hpp"
#include "core/evolution.hpp"
#include "core/geometry.hpp"
#include "core/grid.hpp"
#include "core/laplace.hpp"
#include "core/modes.hpp"
#include "core/oracles.hpp"

namespace {

thread_local std::string g_last_error;

template <class Fn>
gd_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GD_OK;
  } catch (const gendock::PreconditionError& e) {
    g_last_error = e.what();
    return GD_ERR_PRECONDITION;
  } catch (const gendock::SingularMatrixError& e) {
    g_last_error = e.what();
    return GD_ERR_SINGULAR;
  } catch (const gendock::PositivityError& e) {
    g_last_error = e.what();
    return GD_ERR_POSITIVITY;
  } catch (const gendock::ConvergenceError& e) {
    g_last_error = e.what();
    return GD_ERR_NO_CONVERGENCE;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return GD_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return GD_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return GD_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GD_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return GD_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

struct gd_wedge {
  gendock::WedgeGeometry geom;
};

struct gd_grid {
  gendock::WedgeGeometry geom;
  gendock::LogRadialGrid grid;
};

struct gd_field {
  gendock::HarmonicField field;
};

struct gd_dtn {
  gendock::DtnOperator op;
};

struct gd_forcing {
  gendock::ForcingSpec spec;
};

struct gd_trajectory {
  int n = 0;
  std::vector<gendock::SurfaceState> states;
  std::vector<double> energy;
  std::vector<double> apriori_lhs;
  double apriori_rhs = 0.0;
  bool apriori_pass = false;
};

extern "C" {

const char* gd_status_name(gd_status status) {
  switch (status) {
    case GD_OK: return "ok";
    case GD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GD_ERR_DOMAIN: return "domain error";
    case GD_ERR_PRECONDITION: return "precondition violated";
    case GD_ERR_SINGULAR: return "singular system";
    case GD_ERR_POSITIVITY: return "positivity violated";
    case GD_ERR_NO_CONVERGENCE: return "iteration did not converge";
    case GD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gd_last_error(void) { return g_last_error.c_str(); }

const char* gd_version(void) { return "0.1.0"; }

/* ---- geometry ---- */

gd_status gd_wedge_create(double alpha, gd_wedge** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new gd_wedge{gendock::WedgeGeometry(alpha)};
  });
}

void gd_wedge_destroy(gd_wedge* wedge) { delete wedge; }

double gd_wedge_alpha(const gd_wedge* wedge) { return wedge->geom.alpha; }

double gd_wedge_corner_exponent(const gd_wedge* wedge) { return wedge->geom.mu0; }

void gd_wedge_gamma2_normal(const gd_wedge* wedge, double* nu1, double* nu2) {
  if (nu1) *nu1 = wedge->geom.gamma2_normal[0];
  if (nu2) *nu2 = wedge->geom.gamma2_normal[1];
}

gd_status gd_to_polar(double x1, double x2, double* r, double* theta) {
  return guarded([&] {
    const gendock::PolarPoint p = gendock::to_polar(x1, x2);
    if (r) *r = p.r;
    if (theta) *theta = p.theta;
  });
}

void gd_from_polar(double r, double theta, double* x1, double* x2) {
  const auto p = gendock::from_polar(r, theta);
  if (x1) *x1 = p[0];
  if (x2) *x2 = p[1];
}

void gd_rotate_to_gamma2_frame(double x1, double x2, double alpha, double* y1,
                               double* y2) {
  const auto p = gendock::rotate_to_gamma2_frame(x1, x2, alpha);
  if (y1) *y1 = p[0];
  if (y2) *y2 = p[1];
}

int gd_gamma1_flux_sign(void) { return gendock::gamma1_flux_sign(); }

const char* gd_gamma1_flux_description(void) {
  return gendock::gamma1_flux_description();
}

/* ---- modes ---- */

gd_status gd_mode_exponent(int n, double alpha, double* mu) {
  return guarded([&] {
    require(mu != nullptr, "null output pointer");
    *mu = gendock::mode_exponent(n, alpha);
  });
}

gd_status gd_sine_mode_eval(int n, double alpha, double r, double theta,
                            double* value) {
  return guarded([&] {
    require(value != nullptr, "null output pointer");
    *value = gendock::sine_mode_eval(gendock::ModeSpec::sine(n, alpha), r, theta);
  });
}

gd_status gd_cosine_mode_eval(double mu, double alpha, double r, double theta,
                              double* value) {
  return guarded([&] {
    require(value != nullptr, "null output pointer");
    gendock::ModeSpec::cosine(mu, alpha);  // validates (mu, alpha)
    *value = gendock::cosine_mode_eval(mu, alpha, r, theta);
  });
}

gd_status gd_cosine_mode_dtn(double mu, double alpha, double r, double* f,
                             double* lambda_f) {
  return guarded([&] {
    gendock::ModeSpec::cosine(mu, alpha);
    const gendock::DtnSample s = gendock::exact_dtn_of_cosine_mode(mu, alpha, r);
    if (f) *f = s.f;
    if (lambda_f) *lambda_f = s.lambda_f;
  });
}

/* ---- grid ---- */

gd_status gd_grid_create(const gd_wedge* wedge, double r_min, double r_max,
                         int n_r, int n_theta, gd_grid** out) {
  return guarded([&] {
    require(wedge != nullptr && out != nullptr, "null pointer");
    *out = new gd_grid{wedge->geom,
                       gendock::LogRadialGrid(wedge->geom, r_min, r_max, n_r,
                                              n_theta)};
  });
}

void gd_grid_destroy(gd_grid* grid) { delete grid; }

int gd_grid_n_r(const gd_grid* grid) { return grid->grid.n_r; }

int gd_grid_n_theta(const gd_grid* grid) { return grid->grid.n_theta; }

void gd_grid_radii(const gd_grid* grid, double* out) {
  std::copy(grid->grid.r.begin(), grid->grid.r.end(), out);
}

void gd_grid_thetas(const gd_grid* grid, double* out) {
  std::copy(grid->grid.theta.begin(), grid->grid.theta.end(), out);
}

void gd_grid_surface_weights(const gd_grid* grid, double* out) {
  std::copy(grid->grid.surface_weights.begin(), grid->grid.surface_weights.end(),
            out);
}

/* ---- mixed solve ---- */

gd_status gd_solve_mixed_bvp(const gd_wedge* wedge, const gd_grid* grid,
                             const double* f, int arc_kind, const double* inner,
                             const double* outer, gd_field** out) {
  return guarded([&] {
    require(wedge != nullptr && grid != nullptr && f != nullptr && out != nullptr,
            "null pointer");
    require(wedge->geom.alpha == grid->geom.alpha,
            "wedge and grid disagree on alpha");
    const int n_r = grid->grid.n_r;
    const int n_theta = grid->grid.n_theta;
    gendock::ArcBC bc;
    if (arc_kind == GD_ARC_ROBIN_ASYMPTOTIC) {
      bc = gendock::ArcBC::robin();
    } else if (arc_kind == GD_ARC_EXACT_DIRICHLET) {
      require(inner != nullptr && outer != nullptr, "null arc data");
      bc = gendock::ArcBC::dirichlet(std::vector<double>(inner, inner + n_theta),
                                     std::vector<double>(outer, outer + n_theta));
    } else {
      throw std::invalid_argument("unknown arc kind");
    }
    gendock::HarmonicField field = gendock::solve_mixed_bvp(
        wedge->geom, grid->grid, std::span<const double>(f, n_r), bc);
    *out = new gd_field{std::move(field)};
  });
}

void gd_field_destroy(gd_field* field) { delete field; }

gd_status gd_field_values(const gd_field* field, double* out) {
  return guarded([&] {
    require(field != nullptr && out != nullptr, "null pointer");
    std::copy(field->field.values.begin(), field->field.values.end(), out);
  });
}

double gd_field_residual(const gd_field* field) {
  return gendock::residual(field->field);
}

gd_status gd_field_gamma1_flux(const gd_field* field, double* out) {
  return guarded([&] {
    require(field != nullptr && out != nullptr, "null pointer");
    const std::vector<double> flux =
        gendock::normal_derivative_on_gamma1(field->field);
    std::copy(flux.begin(), flux.end(), out);
  });
}

double gd_field_dirichlet_energy(const gd_field* field) {
  return gendock::dirichlet_energy(field->field);
}

/* ---- dtn ---- */

gd_status gd_dtn_assemble(const gd_wedge* wedge, const gd_grid* grid,
                          int n_threads, gd_dtn** out) {
  return guarded([&] {
    require(wedge != nullptr && grid != nullptr && out != nullptr, "null pointer");
    require(wedge->geom.alpha == grid->geom.alpha,
            "wedge and grid disagree on alpha");
    *out = new gd_dtn{gendock::assemble_dtn(wedge->geom, grid->grid, n_threads)};
  });
}

void gd_dtn_destroy(gd_dtn* dtn) { delete dtn; }

int gd_dtn_size(const gd_dtn* dtn) { return dtn->op.n(); }

double gd_dtn_asymmetry(const gd_dtn* dtn) { return dtn->op.asymmetry; }

double gd_dtn_lambda_min_raw(const gd_dtn* dtn) { return dtn->op.lambda_min_raw; }

int gd_dtn_clamped_count(const gd_dtn* dtn) { return dtn->op.clamped_count; }

gd_status gd_dtn_eigenvalues(const gd_dtn* dtn, double* out) {
  return guarded([&] {
    require(dtn != nullptr && out != nullptr, "null pointer");
    std::copy(dtn->op.eigenvalues.begin(), dtn->op.eigenvalues.end(), out);
  });
}

gd_status gd_dtn_matrix(const gd_dtn* dtn, double* out) {
  return guarded([&] {
    require(dtn != nullptr && out != nullptr, "null pointer");
    std::copy(dtn->op.L.begin(), dtn->op.L.end(), out);
  });
}

gd_status gd_dtn_apply(const gd_dtn* dtn, const double* f, double* out) {
  return guarded([&] {
    require(dtn != nullptr && f != nullptr && out != nullptr, "null pointer");
    const std::vector<double> lf =
        gendock::apply(dtn->op, std::span<const double>(f, dtn->op.n()));
    std::copy(lf.begin(), lf.end(), out);
  });
}

gd_status gd_dtn_apply_symmetrized(const gd_dtn* dtn, const double* f,
                                   double* out) {
  return guarded([&] {
    require(dtn != nullptr && f != nullptr && out != nullptr, "null pointer");
    const std::vector<double> lf = gendock::apply_spectral(
        dtn->op, std::span<const double>(f, dtn->op.n()));
    std::copy(lf.begin(), lf.end(), out);
  });
}

gd_status gd_dtn_quadratic_form(const gd_dtn* dtn, const double* f,
                                double* out) {
  return guarded([&] {
    require(dtn != nullptr && f != nullptr && out != nullptr, "null pointer");
    *out = gendock::quadratic_form(dtn->op,
                                   std::span<const double>(f, dtn->op.n()));
  });
}

/* ---- evolution ---- */

gd_status gd_phi_functions(double z, double t, double* c, double* s) {
  return guarded([&] {
    const gendock::PhiPair p = gendock::phi_functions(z, t);
    if (c) *c = p.c;
    if (s) *s = p.s;
  });
}

gd_status gd_forcing_none(gd_forcing** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new gd_forcing{gendock::ForcingSpec::none()};
  });
}

gd_status gd_forcing_gaussian(double amplitude, double center, double width,
                              double t_center, double t_width,
                              gd_forcing** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new gd_forcing{gendock::ForcingSpec::separable_gaussian(
        amplitude, center, width, t_center, t_width)};
  });
}

gd_status gd_forcing_tabulated(const double* times, int n_times,
                               const double* rows, int n_r, gd_forcing** out) {
  return guarded([&] {
    require(out != nullptr && times != nullptr && rows != nullptr, "null pointer");
    require(n_times >= 1 && n_r >= 1, "tabulated forcing needs data");
    std::vector<double> t(times, times + n_times);
    std::vector<std::vector<double>> r(n_times);
    for (int k = 0; k < n_times; ++k) {
      r[k].assign(rows + static_cast<size_t>(k) * n_r,
                  rows + static_cast<size_t>(k + 1) * n_r);
    }
    *out = new gd_forcing{
        gendock::ForcingSpec::tabulated(std::move(t), std::move(r))};
  });
}

void gd_forcing_destroy(gd_forcing* forcing) { delete forcing; }

gd_status gd_propagate_homogeneous(const gd_dtn* dtn, double g, const double* v0,
                                   const double* v1, double t, double* v,
                                   double* v_t) {
  return guarded([&] {
    require(dtn != nullptr && v0 != nullptr && v1 != nullptr && v != nullptr &&
                v_t != nullptr,
            "null pointer");
    const int n = dtn->op.n();
    auto [pv, pvt] = gendock::propagate_homogeneous(
        dtn->op, g, std::span<const double>(v0, n),
        std::span<const double>(v1, n), t);
    std::copy(pv.begin(), pv.end(), v);
    std::copy(pvt.begin(), pvt.end(), v_t);
  });
}

gd_status gd_duhamel(const gd_dtn* dtn, double g, const gd_forcing* forcing,
                     double t, int n_sub, double* v, double* v_t) {
  return guarded([&] {
    require(dtn != nullptr && forcing != nullptr && v != nullptr && v_t != nullptr,
            "null pointer");
    auto [pv, pvt] = gendock::duhamel(dtn->op, g, forcing->spec, t, n_sub);
    std::copy(pv.begin(), pv.end(), v);
    std::copy(pvt.begin(), pvt.end(), v_t);
  });
}

gd_status gd_simulate(const gd_dtn* dtn, double g, double t_final, double dt_out,
                      int n_sub, const double* eta0, const double* v0,
                      const gd_forcing* forcing, gd_trajectory** out) {
  return guarded([&] {
    require(dtn != nullptr && eta0 != nullptr && v0 != nullptr &&
                forcing != nullptr && out != nullptr,
            "null pointer");
    const int n = dtn->op.n();
    gendock::SimulationConfig cfg;
    cfg.g = g;
    cfg.T = t_final;
    cfg.dt_out = dt_out;
    cfg.n_sub = n_sub;
    cfg.eta0.assign(eta0, eta0 + n);
    cfg.v0.assign(v0, v0 + n);
    cfg.forcing = forcing->spec;

    auto traj = new gd_trajectory;
    traj->n = n;
    traj->states = gendock::simulate(dtn->op, cfg);
    traj->energy.reserve(traj->states.size());
    traj->apriori_lhs.reserve(traj->states.size());
    for (const gendock::SurfaceState& st : traj->states) {
      traj->energy.push_back(gendock::spectral_energy(dtn->op, g, st.v, st.v_t));
      traj->apriori_lhs.push_back(gendock::spectral_halfnorm(dtn->op, g, st.v));
    }
    const gendock::AprioriReport rep =
        gendock::apriori_bound_check(dtn->op, g, cfg, traj->states);
    traj->apriori_rhs = rep.rhs;
    traj->apriori_pass = rep.pass;
    *out = traj;
  });
}

void gd_trajectory_destroy(gd_trajectory* traj) { delete traj; }

int gd_trajectory_count(const gd_trajectory* traj) {
  return static_cast<int>(traj->states.size());
}

double gd_trajectory_time(const gd_trajectory* traj, int m) {
  return traj->states[static_cast<size_t>(m)].t;
}

gd_status gd_trajectory_state(const gd_trajectory* traj, int m, double* v,
                              double* v_t, double* eta) {
  return guarded([&] {
    require(traj != nullptr, "null pointer");
    require(m >= 0 && m < static_cast<int>(traj->states.size()),
            "state index out of range");
    const gendock::SurfaceState& st = traj->states[static_cast<size_t>(m)];
    if (v) std::copy(st.v.begin(), st.v.end(), v);
    if (v_t) std::copy(st.v_t.begin(), st.v_t.end(), v_t);
    if (eta) std::copy(st.eta.begin(), st.eta.end(), eta);
  });
}

double gd_trajectory_energy(const gd_trajectory* traj, int m) {
  return traj->energy[static_cast<size_t>(m)];
}

double gd_trajectory_apriori_lhs(const gd_trajectory* traj, int m) {
  return traj->apriori_lhs[static_cast<size_t>(m)];
}

double gd_trajectory_apriori_rhs(const gd_trajectory* traj) {
  return traj->apriori_rhs;
}

int gd_trajectory_apriori_pass(const gd_trajectory* traj) {
  return traj->apriori_pass ? 1 : 0;
}

/* ---- corner condition ---- */

gd_status gd_corner_check(double alpha, double s, double tau_max, int n_samples,
                          gd_corner_report* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const gendock::CornerSymbolReport rep =
        gendock::corner_check(alpha, s, tau_max, n_samples);
    *out = gd_corner_report{};
    out->alpha = rep.alpha;
    out->s = rep.s;
    out->lambda1_re = rep.lambda1.real();
    out->lambda1_im = rep.lambda1.imag();
    out->lambda2_re = rep.lambda2.real();
    out->lambda2_im = rep.lambda2.imag();
    out->mu1_re = rep.mu1.real();
    out->mu1_im = rep.mu1.imag();
    out->mu2_re = rep.mu2.real();
    out->mu2_im = rep.mu2.imag();
    out->beta1 = rep.beta1;
    out->beta2 = rep.beta2;
    out->b20_re = rep.b20.real();
    out->b20_im = rep.b20.imag();
    out->tau_min = rep.tau_min;
    out->tau_max = rep.tau_max;
    out->n_samples = rep.n_samples;
    out->min_abs_m0 = rep.min_abs_m0;
    out->pass = rep.pass ? 1 : 0;
    out->m1 = gendock::CornerSymbolReport::m1;
    out->m2 = gendock::CornerSymbolReport::m2;
  });
}

gd_status gd_corner_profile(double alpha, double s, double tau_max,
                            int n_samples, double* tau_out, double* abs_m0_out) {
  return guarded([&] {
    require(tau_out != nullptr && abs_m0_out != nullptr, "null output pointer");
    const auto prof = gendock::corner_profile(alpha, s, tau_max, n_samples);
    for (size_t k = 0; k < prof.size(); ++k) {
      tau_out[k] = prof[k].first;
      abs_m0_out[k] = prof[k].second;
    }
  });
}

gd_status gd_betas(double alpha, double* beta1, double* beta2) {
  return guarded([&] {
    const auto [b1, b2] = gendock::betas(alpha);
    if (beta1) *beta1 = b1;
    if (beta2) *beta2 = b2;
  });
}

gd_status gd_b20(double alpha, double* re, double* im) {
  return guarded([&] {
    const std::complex<double> b = gendock::b20(alpha);
    if (re) *re = b.real();
    if (im) *im = b.imag();
  });
}

gd_status gd_m0(double z_re, double z_im, double alpha, double* re, double* im) {
  return guarded([&] {
    const std::complex<double> v =
        gendock::M0(std::complex<double>(z_re, z_im), alpha);
    if (re) *re = v.real();
    if (im) *im = v.imag();
  });
}

/* ---- reference computations ---- */

gd_status gd_reflection_dtn_quarter_plane(double x_min, double x_max, int n,
                                          const double* f, double* out) {
  return guarded([&] {
    require(f != nullptr && out != nullptr, "null pointer");
    const gendock::UniformLineGrid grid(x_min, x_max, n);
    const std::vector<double> g = gendock::reflection_dtn_quarter_plane(
        grid, std::span<const double>(f, n));
    std::copy(g.begin(), g.end(), out);
  });
}

gd_status gd_gaussian_bump(const double* nodes, int n, double center,
                           double width, double amplitude, double* out) {
  return guarded([&] {
    require(nodes != nullptr && out != nullptr, "null pointer");
    require(n >= 1, "need at least one node");
    const std::vector<double> b = gendock::gaussian_bump(
        std::span<const double>(nodes, n), center, width, amplitude);
    std::copy(b.begin(), b.end(), out);
  });
}

} /* extern "C" */
