// SPDX-License-Identifier: Apache-2.0
#include "core/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gendock {

PhiPair phi_functions(double z, double t) {
  if (z < 0.0) throw std::domain_error("phi_functions requires z >= 0");
  const double x = z * t * t;
  if (x < 1e-8) {
    return {1.0 - x / 2.0 + x * x / 24.0,
            t * (1.0 - x / 6.0 + x * x / 120.0)};
  }
  const double w = std::sqrt(z);
  return {std::cos(w * t), std::sin(w * t) / w};
}

double phi2_function(double z, double h) {
  if (z < 0.0) throw std::domain_error("phi2 requires z >= 0");
  const double x = z * h * h;
  if (x < 1e-8) return h * h * (0.5 - x / 24.0 + x * x / 720.0);
  return (1.0 - std::cos(std::sqrt(z) * h)) / z;
}

double phi3_function(double z, double h) {
  if (z < 0.0) throw std::domain_error("phi3 requires z >= 0");
  const double x = z * h * h;
  if (x < 1e-8) return h * h * h * (1.0 / 6.0 - x / 120.0 + x * x / 5040.0);
  const double w = std::sqrt(z);
  return (h - std::sin(w * h) / w) / z;
}

ForcingSpec ForcingSpec::none() { return ForcingSpec{}; }

ForcingSpec ForcingSpec::separable_gaussian(double amplitude, double center,
                                            double width, double t_center,
                                            double t_width) {
  ForcingSpec f;
  f.kind = Kind::separable_gaussian;
  f.amplitude = amplitude;
  f.center = center;
  f.width = width;
  f.t_center = t_center;
  f.t_width = t_width;
  if (!(width > 0.0) || !(t_width > 0.0)) {
    throw std::invalid_argument("forcing widths must be positive");
  }
  return f;
}

ForcingSpec ForcingSpec::tabulated(std::vector<double> times,
                                   std::vector<std::vector<double>> rows) {
  ForcingSpec f;
  f.kind = Kind::tabulated;
  f.times = std::move(times);
  f.rows = std::move(rows);
  if (f.times.empty() || f.times.size() != f.rows.size()) {
    throw std::invalid_argument("tabulated forcing needs one row per time");
  }
  for (size_t k = 1; k < f.times.size(); ++k) {
    if (!(f.times[k] > f.times[k - 1])) {
      throw std::invalid_argument("tabulated times must be strictly increasing");
    }
  }
  return f;
}

void ForcingSpec::validate(int n) const {
  switch (kind) {
    case Kind::none:
      return;
    case Kind::separable_gaussian:
      if (!(width > 0.0) || !(t_width > 0.0)) {
        throw std::invalid_argument("forcing widths must be positive");
      }
      return;
    case Kind::tabulated:
      if (times.empty() || times.size() != rows.size()) {
        throw std::invalid_argument("tabulated forcing needs one row per time");
      }
      for (size_t k = 1; k < times.size(); ++k) {
        if (!(times[k] > times[k - 1])) {
          throw std::invalid_argument("tabulated times must be strictly increasing");
        }
      }
      for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) {
          throw std::invalid_argument("tabulated row length must equal n_r");
        }
      }
      return;
  }
}

void ForcingSpec::eval_p_t(std::span<const double> r, double t,
                           std::span<double> out) const {
  const size_t n = r.size();
  switch (kind) {
    case Kind::none: {
      std::fill(out.begin(), out.end(), 0.0);
      return;
    }
    case Kind::separable_gaussian: {
      const double tt = (t - t_center) / t_width;
      const double gt = std::exp(-tt * tt) * (-2.0 * (t - t_center) / (t_width * t_width));
      for (size_t i = 0; i < n; ++i) {
        const double x = (r[i] - center) / width;
        out[i] = amplitude * std::exp(-x * x) * gt;
      }
      return;
    }
    case Kind::tabulated: {
      if (t <= times.front()) {
        std::copy(rows.front().begin(), rows.front().end(), out.begin());
        return;
      }
      if (t >= times.back()) {
        std::copy(rows.back().begin(), rows.back().end(), out.begin());
        return;
      }
      const auto it = std::upper_bound(times.begin(), times.end(), t);
      const size_t k = static_cast<size_t>(it - times.begin());
      const double frac = (t - times[k - 1]) / (times[k] - times[k - 1]);
      for (size_t i = 0; i < n; ++i) {
        out[i] = rows[k - 1][i] + frac * (rows[k][i] - rows[k - 1][i]);
      }
      return;
    }
  }
}

void ForcingSpec::eval_p(std::span<const double> r, double t,
                         std::span<double> out) const {
  const size_t n = r.size();
  switch (kind) {
    case Kind::none: {
      std::fill(out.begin(), out.end(), 0.0);
      return;
    }
    case Kind::separable_gaussian: {
      const double tt = (t - t_center) / t_width;
      const double gt = std::exp(-tt * tt);
      for (size_t i = 0; i < n; ++i) {
        const double x = (r[i] - center) / width;
        out[i] = amplitude * std::exp(-x * x) * gt;
      }
      return;
    }
    case Kind::tabulated: {
      // P(t) = int_0^t P_t; the interpolant is piecewise linear, so the
      // trapezoid over segment endpoints is exact.
      std::fill(out.begin(), out.end(), 0.0);
      if (t == 0.0) return;
      const double lo = std::min(0.0, t);
      const double hi = std::max(0.0, t);
      std::vector<double> cuts;
      cuts.push_back(lo);
      for (double tk : times) {
        if (tk > lo && tk < hi) cuts.push_back(tk);
      }
      cuts.push_back(hi);
      std::vector<double> fa(n), fb(n);
      const double sign = t >= 0.0 ? 1.0 : -1.0;
      for (size_t s = 0; s + 1 < cuts.size(); ++s) {
        eval_p_t(r, cuts[s], fa);
        eval_p_t(r, cuts[s + 1], fb);
        const double half = 0.5 * (cuts[s + 1] - cuts[s]) * sign;
        for (size_t i = 0; i < n; ++i) out[i] += half * (fa[i] + fb[i]);
      }
      return;
    }
  }
}

void SimulationConfig::validate(int n) const {
  if (!(g > 0.0)) throw std::invalid_argument("g must be positive");
  if (!(dt_out > 0.0) || !(dt_out <= T)) {
    throw std::invalid_argument("require 0 < dt_out <= T");
  }
  if (n_sub < 1) throw std::invalid_argument("n_sub must be >= 1");
  if (static_cast<int>(eta0.size()) != n || static_cast<int>(v0.size()) != n) {
    throw std::invalid_argument("initial data length must equal n_r");
  }
  for (double x : eta0)
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite eta0");
  for (double x : v0)
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite v0");
  forcing.validate(n);
}

std::pair<std::vector<double>, std::vector<double>> propagate_homogeneous(
    const DtnOperator& op, double g, std::span<const double> v0,
    std::span<const double> v1, double t) {
  const int n = op.n();
  if (static_cast<int>(v0.size()) != n || static_cast<int>(v1.size()) != n) {
    throw std::invalid_argument("data length must equal n_r");
  }
  if (t < 0.0) throw std::invalid_argument("propagation time must be >= 0");
  std::vector<double> a = to_spectral(op, v0);
  std::vector<double> b = to_spectral(op, v1);
  std::vector<double> av(n), bv(n);
  for (int k = 0; k < n; ++k) {
    const double z = g * op.eigenvalues[k];
    const PhiPair phi = phi_functions(z, t);
    av[k] = phi.c * a[k] + phi.s * b[k];
    bv[k] = -z * phi.s * a[k] + phi.c * b[k];
  }
  return {from_spectral(op, av), from_spectral(op, bv)};
}

namespace {

// Advance the per-mode oscillators y'' + z y = p(s) exactly across one step
// of the piecewise-linear forcing: p(s) = a + slope (s - s_j) on the step.
struct ModeStepper {
  std::vector<double> c, s, p2, p3, z;

  ModeStepper(const DtnOperator& op, double g, double h) {
    const int n = op.n();
    c.resize(n);
    s.resize(n);
    p2.resize(n);
    p3.resize(n);
    z.resize(n);
    for (int k = 0; k < n; ++k) {
      z[k] = g * op.eigenvalues[k];
      const PhiPair phi = phi_functions(z[k], h);
      c[k] = phi.c;
      s[k] = phi.s;
      p2[k] = phi2_function(z[k], h);
      p3[k] = phi3_function(z[k], h);
    }
  }

  void step(std::span<double> y, std::span<double> yd,
            std::span<const double> pj, std::span<const double> pj1,
            double inv_h) const {
    const int n = static_cast<int>(z.size());
    for (int k = 0; k < n; ++k) {
      const double a = pj[k];
      const double slope = (pj1[k] - pj[k]) * inv_h;
      const double yk = y[k];
      const double ydk = yd[k];
      y[k] = c[k] * yk + s[k] * ydk + a * p2[k] + slope * p3[k];
      yd[k] = -z[k] * s[k] * yk + c[k] * ydk + a * s[k] + slope * p2[k];
    }
  }
};

}  // namespace

std::pair<std::vector<double>, std::vector<double>> duhamel(
    const DtnOperator& op, double g, const ForcingSpec& forcing, double t,
    int n_sub) {
  const int n = op.n();
  if (t < 0.0) throw std::invalid_argument("duhamel time must be >= 0");
  if (n_sub < 1) throw std::invalid_argument("n_sub must be >= 1");
  forcing.validate(n);

  std::vector<double> y(n, 0.0), yd(n, 0.0);
  if (t == 0.0 || forcing.kind == ForcingSpec::Kind::none) {
    return {from_spectral(op, y), from_spectral(op, yd)};
  }

  const double h = t / n_sub;
  const ModeStepper stepper(op, g, h);
  std::vector<double> phys(n);
  std::vector<double> p_prev, p_next;
  forcing.eval_p_t(op.grid.r, 0.0, phys);
  p_prev = to_spectral(op, phys);
  for (int j = 0; j < n_sub; ++j) {
    forcing.eval_p_t(op.grid.r, (j + 1) * h, phys);
    p_next = to_spectral(op, phys);
    stepper.step(y, yd, p_prev, p_next, 1.0 / h);
    std::swap(p_prev, p_next);
  }
  return {from_spectral(op, y), from_spectral(op, yd)};
}

std::vector<SurfaceState> simulate(const DtnOperator& op,
                                   const SimulationConfig& cfg) {
  const int n = op.n();
  cfg.validate(n);

  std::vector<double> p0(n);
  cfg.forcing.eval_p(op.grid.r, 0.0, p0);
  std::vector<double> v1(n);
  for (int i = 0; i < n; ++i) v1[i] = p0[i] - cfg.g * cfg.eta0[i];

  const std::vector<double> a0 = to_spectral(op, cfg.v0);
  const std::vector<double> b0 = to_spectral(op, v1);

  const int m_out = static_cast<int>(std::floor(cfg.T / cfg.dt_out + 1e-9));

  // Forcing integrated once on the global grid of n_sub sub-intervals per
  // output interval; the state at each output knot equals the Duhamel
  // convolution evaluated there.
  const bool forced = cfg.forcing.kind != ForcingSpec::Kind::none;
  std::vector<std::vector<double>> duh_y, duh_yd;
  if (forced) {
    const double h = cfg.dt_out / cfg.n_sub;
    const ModeStepper stepper(op, cfg.g, h);
    std::vector<double> y(n, 0.0), yd(n, 0.0), phys(n);
    std::vector<double> p_prev, p_next;
    cfg.forcing.eval_p_t(op.grid.r, 0.0, phys);
    p_prev = to_spectral(op, phys);
    duh_y.push_back(y);
    duh_yd.push_back(yd);
    for (int m = 1; m <= m_out; ++m) {
      for (int j = 0; j < cfg.n_sub; ++j) {
        const double s1 = ((m - 1) * cfg.n_sub + j + 1) * h;
        cfg.forcing.eval_p_t(op.grid.r, s1, phys);
        p_next = to_spectral(op, phys);
        stepper.step(y, yd, p_prev, p_next, 1.0 / h);
        std::swap(p_prev, p_next);
      }
      duh_y.push_back(y);
      duh_yd.push_back(yd);
    }
  }

  std::vector<SurfaceState> out;
  out.reserve(m_out + 1);
  std::vector<double> av(n), bv(n), p_now(n);
  for (int m = 0; m <= m_out; ++m) {
    const double t = m * cfg.dt_out;
    for (int k = 0; k < n; ++k) {
      const double z = cfg.g * op.eigenvalues[k];
      const PhiPair phi = phi_functions(z, t);
      av[k] = phi.c * a0[k] + phi.s * b0[k];
      bv[k] = -z * phi.s * a0[k] + phi.c * b0[k];
      if (forced) {
        av[k] += duh_y[m][k];
        bv[k] += duh_yd[m][k];
      }
    }
    SurfaceState state;
    state.t = t;
    state.v = from_spectral(op, av);
    state.v_t = from_spectral(op, bv);
    cfg.forcing.eval_p(op.grid.r, t, p_now);
    state.eta.resize(n);
    for (int i = 0; i < n; ++i) state.eta[i] = (p_now[i] - state.v_t[i]) / cfg.g;
    out.push_back(std::move(state));
  }
  return out;
}

double spectral_energy(const DtnOperator& op, double g,
                       std::span<const double> v, std::span<const double> v_t) {
  const std::vector<double> a = to_spectral(op, v);
  const std::vector<double> b = to_spectral(op, v_t);
  double acc = 0.0;
  for (int k = 0; k < op.n(); ++k) {
    acc += b[k] * b[k] + g * op.eigenvalues[k] * a[k] * a[k];
  }
  return acc;
}

double spectral_halfnorm(const DtnOperator& op, double g,
                         std::span<const double> v) {
  const std::vector<double> a = to_spectral(op, v);
  double acc = 0.0;
  for (int k = 0; k < op.n(); ++k) acc += g * op.eigenvalues[k] * a[k] * a[k];
  return std::sqrt(acc);
}

AprioriReport apriori_bound_check(const DtnOperator& op, double g,
                                  const SimulationConfig& cfg,
                                  std::span<const SurfaceState> trajectory) {
  const int n = op.n();
  cfg.validate(n);

  AprioriReport report;
  for (const SurfaceState& st : trajectory) {
    report.lhs = std::max(report.lhs, spectral_halfnorm(op, g, st.v));
  }

  std::vector<double> p0(n);
  cfg.forcing.eval_p(op.grid.r, 0.0, p0);
  std::vector<double> v1(n);
  for (int i = 0; i < n; ++i) v1[i] = p0[i] - cfg.g * cfg.eta0[i];

  double v1_norm = 0.0;
  for (int i = 0; i < n; ++i) v1_norm += op.w[i] * v1[i] * v1[i];
  v1_norm = std::sqrt(v1_norm);

  double forcing_integral = 0.0;
  if (cfg.forcing.kind != ForcingSpec::Kind::none) {
    // Same knots as the simulate stepping grid, extended through T, so the
    // trapezoid of ||P_t|| dominates the integral of the interpolant used by
    // the propagator (norms of linear interpolants are convex per interval).
    const double h = cfg.dt_out / cfg.n_sub;
    std::vector<double> knots;
    for (long j = 0; j * h < cfg.T; ++j) knots.push_back(j * h);
    knots.push_back(cfg.T);
    std::vector<double> phys(n);
    auto weighted_norm_at = [&](double s) {
      cfg.forcing.eval_p_t(op.grid.r, s, phys);
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += op.w[i] * phys[i] * phys[i];
      return std::sqrt(acc);
    };
    double prev = weighted_norm_at(knots[0]);
    for (size_t j = 1; j < knots.size(); ++j) {
      const double cur = weighted_norm_at(knots[j]);
      forcing_integral += 0.5 * (knots[j] - knots[j - 1]) * (prev + cur);
      prev = cur;
    }
  }

  report.rhs = forcing_integral + spectral_halfnorm(op, g, cfg.v0) + v1_norm;
  report.pass = report.lhs <= report.rhs * (1.0 + 1e-9);
  return report;
}

}  // namespace gendock
