// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "core/dtn.hpp"

namespace gendock {

/// Scalar spectral pair c = cos(t sqrt(z)), s = sin(t sqrt(z))/sqrt(z) with a
/// series-guarded branch below z t^2 = 1e-8, so s is continuous through z = 0
/// with s(0, t) = t. Throws std::domain_error for z < 0.
struct PhiPair {
  double c;
  double s;
};
PhiPair phi_functions(double z, double t);

// Forced-oscillator response moments over a step of length h:
//   phi2 = (1 - cos(sqrt(z) h)) / z,   phi3 = (h - sin(sqrt(z) h)/sqrt(z)) / z,
// with the same series guard. Building blocks of the exact per-interval
// integration of piecewise-linear forcing.
double phi2_function(double z, double h);
double phi3_function(double z, double h);

/// Surface pressure term. P_t drives the evolution; P itself enters the
/// initial velocity and the elevation recovery.
struct ForcingSpec {
  enum class Kind { none, separable_gaussian, tabulated };
  Kind kind = Kind::none;

  // separable_gaussian: P(r,t) = amplitude exp(-((r-center)/width)^2)
  //                              exp(-((t-t_center)/t_width)^2)
  double amplitude = 0.0;
  double center = 0.0;
  double width = 1.0;
  double t_center = 0.0;
  double t_width = 1.0;

  // tabulated: rows of P_t samples at strictly increasing times, linear in t
  // between rows, clamped outside. P is recovered as int_0^t P_t.
  std::vector<double> times;
  std::vector<std::vector<double>> rows;

  static ForcingSpec none();
  static ForcingSpec separable_gaussian(double amplitude, double center,
                                        double width, double t_center,
                                        double t_width);
  static ForcingSpec tabulated(std::vector<double> times,
                               std::vector<std::vector<double>> rows);

  void validate(int n) const;
  void eval_p_t(std::span<const double> r, double t, std::span<double> out) const;
  void eval_p(std::span<const double> r, double t, std::span<double> out) const;
};

struct SurfaceState {
  double t = 0.0;
  std::vector<double> v;
  std::vector<double> v_t;
  std::vector<double> eta;  // (P - v_t) / g by construction
};

struct SimulationConfig {
  double g = 9.81;
  double T = 1.0;
  double dt_out = 0.1;
  int n_sub = 8;  // forcing sub-intervals per output interval
  std::vector<double> eta0;
  std::vector<double> v0;
  ForcingSpec forcing;

  void validate(int n) const;
};

// Exact-in-time propagation of v_tt + g L v = 0 from (v0, v1): no CFL limit
// and no time-marching error, only the spectral transforms.
std::pair<std::vector<double>, std::vector<double>> propagate_homogeneous(
    const DtnOperator& op, double g, std::span<const double> v0,
    std::span<const double> v1, double t);

// Particular solution at time t from zero data: per mode, the convolution
// int_0^t sin(omega (t-s))/omega p_k(s) ds with P_t sampled at n_sub + 1
// uniform times and integrated interval-by-interval in closed form.
std::pair<std::vector<double>, std::vector<double>> duhamel(
    const DtnOperator& op, double g, const ForcingSpec& forcing, double t,
    int n_sub);

std::vector<SurfaceState> simulate(const DtnOperator& op,
                                   const SimulationConfig& cfg);

// ||v_t||_w^2 + g <L v, v>_w through the spectral decomposition; exactly
// conserved by the homogeneous propagator up to roundoff.
double spectral_energy(const DtnOperator& op, double g,
                       std::span<const double> v, std::span<const double> v_t);

// ||(g L)^{1/2} v||_w
double spectral_halfnorm(const DtnOperator& op, double g,
                         std::span<const double> v);

struct AprioriReport {
  double lhs = 0.0;  // max_m ||(g L)^{1/2} v(t_m)||_w
  double rhs = 0.0;  // int_0^T ||P_t||_w dt + ||(g L)^{1/2} v0||_w + ||v1||_w
  bool pass = false;
};

AprioriReport apriori_bound_check(const DtnOperator& op, double g,
                                  const SimulationConfig& cfg,
                                  std::span<const SurfaceState> trajectory);

}  // namespace gendock
