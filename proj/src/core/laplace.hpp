// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <span>
#include <vector>

#include "core/banded.hpp"
#include "core/geometry.hpp"
#include "core/grid.hpp"

namespace gendock {

/// Closure of the truncation arcs r = r_min and r = r_max.
///
/// robin_asymptotic matches the leading admissible mode at each arc:
/// d/drho u = +mu0 u at the inner arc (u ~ r^mu0 near the corner) and
/// d/drho u = -mu0 u at the outer arc (u ~ r^-mu0 in the far field), imposed
/// through a radial ghost node in the arc's own stencil row (second order).
/// The closure is exact for the first mode; the relative truncation error is
/// carried by the next one, O(r^(3 mu0)).
struct ArcBC {
  enum class Kind { robin_asymptotic, exact_dirichlet };
  Kind kind = Kind::robin_asymptotic;
  std::vector<double> inner;  // length n_theta, exact_dirichlet only
  std::vector<double> outer;

  static ArcBC robin();
  static ArcBC dirichlet(std::vector<double> inner, std::vector<double> outer);
};

/// Nodal solution u(rho_i, theta_j) of the discrete mixed problem.
struct HarmonicField {
  LogRadialGrid grid;
  std::vector<double> values;  // index i * n_theta + j

  double at(int i, int j) const { return values[grid.index(i, j)]; }
};

/// Discrete mixed problem: 5-point u_rhorho + u_thetatheta = 0 in the
/// interior, Dirichlet data on theta = 0, ghost-node Neumann on
/// theta = alpha, arc closure per ArcBC. One band factorization is built per
/// (grid, arc kind) and may be reused for many right-hand sides; solves are
/// safe to run concurrently against a const solver.
class MixedBvpSolver {
 public:
  MixedBvpSolver(const WedgeGeometry& geom, const LogRadialGrid& grid,
                 ArcBC::Kind kind);

  const LogRadialGrid& grid() const { return grid_; }
  ArcBC::Kind kind() const { return kind_; }

  HarmonicField solve(std::span<const double> f, const ArcBC& bc) const;

 private:
  WedgeGeometry geom_;
  LogRadialGrid grid_;
  ArcBC::Kind kind_;
  std::unique_ptr<BandLU> lu_;

  void apply_operator(std::span<const double> x, std::span<double> y) const;
  std::vector<double> rhs(std::span<const double> f, const ArcBC& bc) const;
};

HarmonicField solve_mixed_bvp(const WedgeGeometry& geom,
                              const LogRadialGrid& grid,
                              std::span<const double> f, const ArcBC& bc);

// Max over the Laplace-equation rows (interior nodes and the ghost-closed
// Gamma2 row) of |u_rhorho + u_thetatheta|, same stencil as assembly.
double residual(const HarmonicField& field);

// Outward flux on Gamma1: -(1/r_i) (-3u_{i,0} + 4u_{i,1} - u_{i,2}) / (2 dtheta).
std::vector<double> normal_derivative_on_gamma1(const HarmonicField& field);

}  // namespace gendock
