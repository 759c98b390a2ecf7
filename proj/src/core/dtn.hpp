// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "core/geometry.hpp"
#include "core/grid.hpp"
#include "core/laplace.hpp"

namespace gendock {

/// Discrete Dirichlet-to-Neumann operator on Gamma1.
///
/// Column j of L is the Gamma1 flux of the harmonic extension of the nodal
/// unit surface function e_j (Robin-closed arcs). L is symmetric with respect
/// to the weighted pairing <f,g>_w = sum w_i f_i g_i up to discretization
/// error; the similarity S = D_w^{1/2} L D_w^{-1/2} is averaged with its
/// transpose before the eigendecomposition and the pre-averaging defect is
/// recorded as a quality metric. Spectral functions of the operator (wave
/// propagators) act through Q and the eigenvalues.
struct DtnOperator {
  LogRadialGrid grid;
  double alpha = 0.0;
  std::vector<double> L;            // n x n row-major
  std::vector<double> w;            // surface weights
  std::vector<double> sqrt_w;
  std::vector<double> inv_sqrt_w;
  std::vector<double> S;            // symmetrized core, n x n
  std::vector<double> eigenvalues;  // ascending, clamped nonnegative
  std::vector<double> Q;            // orthonormal eigenvectors of S (columns)
  double asymmetry = 0.0;           // max|S - S^T| / max|S| before averaging
  double lambda_min_raw = 0.0;      // smallest eigenvalue before clamping
  int clamped_count = 0;

  int n() const { return grid.n_r; }
};

// Negative eigenvalues below -tol * lambda_max are a discretization bug and
// raise std::runtime_error; those within the band are clamped to zero.
inline constexpr double kEigenvalueClampTol = 1e-8;

// n_threads = 0 picks a hardware-based default; any thread count produces
// bitwise identical results (columns are independent solves written to
// disjoint slots).
DtnOperator assemble_dtn(const WedgeGeometry& geom, const LogRadialGrid& grid,
                         int n_threads = 0);

std::vector<double> apply(const DtnOperator& op, std::span<const double> f);

// <Lf, f>_w, the discrete surface pairing of data with its flux.
double quadratic_form(const DtnOperator& op, std::span<const double> f);

// Tensor-trapezoid quadrature of (u_rho^2 + u_theta^2) drho dtheta; the log
// substitution absorbs the polar Jacobian.
double dirichlet_energy(const HarmonicField& field);

struct Eigendecomposition {
  const std::vector<double>& values;
  const std::vector<double>& vectors;
};
Eigendecomposition eigendecompose(const DtnOperator& op);

// Spectral coordinates with respect to the symmetrized core:
//   a = Q^T D_w^{1/2} f   and back   f = D_w^{-1/2} Q a.
std::vector<double> to_spectral(const DtnOperator& op, std::span<const double> f);
std::vector<double> from_spectral(const DtnOperator& op, std::span<const double> a);

// Action of the symmetrized operator D_w^{-1/2} sym(S) D_w^{1/2} on f.
std::vector<double> apply_spectral(const DtnOperator& op, std::span<const double> f);

}  // namespace gendock
