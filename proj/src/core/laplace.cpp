// SPDX-License-Identifier: Apache-2.0
#include "core/laplace.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gendock {

ArcBC ArcBC::robin() {
  ArcBC bc;
  bc.kind = Kind::robin_asymptotic;
  return bc;
}

ArcBC ArcBC::dirichlet(std::vector<double> inner, std::vector<double> outer) {
  ArcBC bc;
  bc.kind = Kind::exact_dirichlet;
  bc.inner = std::move(inner);
  bc.outer = std::move(outer);
  return bc;
}

namespace {

// Row classification shared by assembly, matrix-free application and RHS
// construction. Every node owns exactly one equation:
//   surface j = 0          u = f_i
//   arcs i = 0, n_r-1      robin or prescribed value (j >= 1)
//   gamma2 j = M           interior stencil with the Neumann ghost
//   interior               5-point stencil
template <class Emit>
void visit_row(const WedgeGeometry& geom, const LogRadialGrid& g,
               ArcBC::Kind kind, int i, int j, Emit&& emit) {
  const int M = g.n_theta - 1;
  const int N = g.n_r;
  const int row = g.index(i, j);
  const double inv_drho2 = 1.0 / (g.d_rho * g.d_rho);
  const double inv_dth2 = 1.0 / (g.d_theta * g.d_theta);

  if (j == 0) {
    emit(row, row, 1.0);
    return;
  }
  if (i == 0 || i == N - 1) {
    if (kind == ArcBC::Kind::exact_dirichlet) {
      emit(row, row, 1.0);
      return;
    }
    // Robin closure folded into the arc node's own Laplace row through a
    // radial ghost: d/drho u = +-mu0 u eliminates the ghost value and leaves
    // -2 mu0/d_rho on the diagonal at either arc. Keeps the arc nodes coupled
    // to their theta neighbours (a one-sided radial row would orphan the
    // surface corner nodes and wreck the operator's symmetry).
    const int inner = (i == 0) ? g.index(1, j) : g.index(N - 2, j);
    emit(row, inner, 2.0 * inv_drho2);
    emit(row, row, -2.0 * inv_drho2 - 2.0 * geom.mu0 / g.d_rho);
    if (j == M) {
      emit(row, g.index(i, M - 1), 2.0 * inv_dth2);
      emit(row, row, -2.0 * inv_dth2);
    } else {
      emit(row, g.index(i, j - 1), inv_dth2);
      emit(row, g.index(i, j + 1), inv_dth2);
      emit(row, row, -2.0 * inv_dth2);
    }
    return;
  }
  if (j == M) {
    emit(row, g.index(i - 1, M), inv_drho2);
    emit(row, g.index(i + 1, M), inv_drho2);
    emit(row, g.index(i, M - 1), 2.0 * inv_dth2);
    emit(row, g.index(i, M), -2.0 * inv_drho2 - 2.0 * inv_dth2);
    return;
  }
  emit(row, g.index(i - 1, j), inv_drho2);
  emit(row, g.index(i + 1, j), inv_drho2);
  emit(row, g.index(i, j - 1), inv_dth2);
  emit(row, g.index(i, j + 1), inv_dth2);
  emit(row, g.index(i, j), -2.0 * inv_drho2 - 2.0 * inv_dth2);
}

}  // namespace

MixedBvpSolver::MixedBvpSolver(const WedgeGeometry& geom,
                               const LogRadialGrid& grid, ArcBC::Kind kind)
    : geom_(geom), grid_(grid), kind_(kind) {
  const int n = grid_.n_r * grid_.n_theta;
  const int band = grid_.n_theta;
  BandMatrix a(n, band, band);
  for (int i = 0; i < grid_.n_r; ++i) {
    for (int j = 0; j < grid_.n_theta; ++j) {
      visit_row(geom_, grid_, kind_, i, j,
                [&a](int row, int col, double v) { a.add(row, col, v); });
    }
  }
  lu_ = std::make_unique<BandLU>(a);
}

void MixedBvpSolver::apply_operator(std::span<const double> x,
                                    std::span<double> y) const {
  for (int i = 0; i < grid_.n_r; ++i) {
    for (int j = 0; j < grid_.n_theta; ++j) {
      double acc = 0.0;
      visit_row(geom_, grid_, kind_, i, j,
                [&acc, &x](int, int col, double v) { acc += v * x[col]; });
      y[grid_.index(i, j)] = acc;
    }
  }
}

std::vector<double> MixedBvpSolver::rhs(std::span<const double> f,
                                        const ArcBC& bc) const {
  const int N = grid_.n_r;
  const int M = grid_.n_theta - 1;
  std::vector<double> b(static_cast<size_t>(N) * grid_.n_theta, 0.0);
  for (int i = 0; i < N; ++i) b[grid_.index(i, 0)] = f[i];
  if (kind_ == ArcBC::Kind::exact_dirichlet) {
    for (int j = 1; j <= M; ++j) {
      b[grid_.index(0, j)] = bc.inner[j];
      b[grid_.index(N - 1, j)] = bc.outer[j];
    }
  }
  return b;
}

HarmonicField MixedBvpSolver::solve(std::span<const double> f,
                                    const ArcBC& bc) const {
  if (static_cast<int>(f.size()) != grid_.n_r) {
    throw std::invalid_argument("surface data length must equal n_r");
  }
  if (bc.kind != kind_) {
    throw std::invalid_argument("arc kind does not match the factorization");
  }
  for (double v : f) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite surface data");
  }
  if (kind_ == ArcBC::Kind::exact_dirichlet) {
    if (static_cast<int>(bc.inner.size()) != grid_.n_theta ||
        static_cast<int>(bc.outer.size()) != grid_.n_theta) {
      throw std::invalid_argument("arc data length must equal n_theta");
    }
    for (double v : bc.inner)
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite arc data");
    for (double v : bc.outer)
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite arc data");
  }

  const std::vector<double> b = rhs(f, bc);
  std::vector<double> x = b;
  lu_->solve(x);

  // One refinement pass keeps the stencil residual at roundoff level
  // independent of the band growth factor.
  std::vector<double> r(b.size());
  apply_operator(x, r);
  for (size_t k = 0; k < r.size(); ++k) r[k] = b[k] - r[k];
  lu_->solve(r);
  for (size_t k = 0; k < x.size(); ++k) x[k] += r[k];

  HarmonicField field;
  field.grid = grid_;
  field.values = std::move(x);
  return field;
}

HarmonicField solve_mixed_bvp(const WedgeGeometry& geom,
                              const LogRadialGrid& grid,
                              std::span<const double> f, const ArcBC& bc) {
  MixedBvpSolver solver(geom, grid, bc.kind);
  return solver.solve(f, bc);
}

double residual(const HarmonicField& field) {
  const LogRadialGrid& g = field.grid;
  const int M = g.n_theta - 1;
  const double inv_drho2 = 1.0 / (g.d_rho * g.d_rho);
  const double inv_dth2 = 1.0 / (g.d_theta * g.d_theta);
  auto u = [&](int i, int j) { return field.values[g.index(i, j)]; };

  double worst = 0.0;
  for (int i = 1; i < g.n_r - 1; ++i) {
    for (int j = 1; j <= M; ++j) {
      const double u_th =
          (j == M) ? 2.0 * (u(i, M - 1) - u(i, M)) * inv_dth2
                   : (u(i, j - 1) - 2.0 * u(i, j) + u(i, j + 1)) * inv_dth2;
      const double u_rr = (u(i - 1, j) - 2.0 * u(i, j) + u(i + 1, j)) * inv_drho2;
      worst = std::max(worst, std::fabs(u_rr + u_th));
    }
  }
  return worst;
}

std::vector<double> normal_derivative_on_gamma1(const HarmonicField& field) {
  const LogRadialGrid& g = field.grid;
  if (g.n_theta < 3) throw std::invalid_argument("flux stencil needs n_theta >= 3");
  std::vector<double> out(g.n_r);
  const double h2 = 2.0 * g.d_theta;
  auto u = [&](int i, int j) { return field.values[g.index(i, j)]; };
  for (int i = 0; i < g.n_r; ++i) {
    out[i] = -(-3.0 * u(i, 0) + 4.0 * u(i, 1) - u(i, 2)) / (h2 * g.r[i]);
  }
  return out;
}

}  // namespace gendock
