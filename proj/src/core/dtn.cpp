// SPDX-License-Identifier: Apache-2.0
#include "core/dtn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "core/errors.hpp"
#include "core/symeig.hpp"

namespace gendock {

namespace {

int resolve_threads(int requested, int columns) {
  if (requested > 0) return std::min(requested, columns);
  const unsigned hw = std::thread::hardware_concurrency();
  const int def = hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
  return std::min(def, columns);
}

}  // namespace

DtnOperator assemble_dtn(const WedgeGeometry& geom, const LogRadialGrid& grid,
                         int n_threads) {
  const int n = grid.n_r;
  DtnOperator op;
  op.grid = grid;
  op.alpha = geom.alpha;
  op.w = grid.surface_weights;
  op.sqrt_w.resize(n);
  op.inv_sqrt_w.resize(n);
  for (int i = 0; i < n; ++i) {
    op.sqrt_w[i] = std::sqrt(op.w[i]);
    op.inv_sqrt_w[i] = 1.0 / op.sqrt_w[i];
  }

  const MixedBvpSolver solver(geom, grid, ArcBC::Kind::robin_asymptotic);
  const ArcBC robin = ArcBC::robin();
  op.L.assign(static_cast<size_t>(n) * n, 0.0);

  auto solve_column = [&](int j) {
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    const HarmonicField field = solver.solve(e, robin);
    const std::vector<double> flux = normal_derivative_on_gamma1(field);
    for (int i = 0; i < n; ++i) op.L[static_cast<size_t>(i) * n + j] = flux[i];
  };

  const int threads = resolve_threads(n_threads, n);
  if (threads <= 1) {
    for (int j = 0; j < n; ++j) solve_column(j);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t]() {
        for (int j = t; j < n; j += threads) solve_column(j);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (double v : op.L) {
    if (!std::isfinite(v)) throw std::runtime_error("non-finite operator entry");
  }

  // Similarity core and its symmetry defect.
  std::vector<double> s(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s[static_cast<size_t>(i) * n + j] =
          op.sqrt_w[i] * op.L[static_cast<size_t>(i) * n + j] * op.inv_sqrt_w[j];
    }
  }
  double max_abs = 0.0;
  double max_defect = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      max_abs = std::max(max_abs, std::fabs(s[static_cast<size_t>(i) * n + j]));
      if (j > i) {
        max_defect = std::max(
            max_defect, std::fabs(s[static_cast<size_t>(i) * n + j] -
                                  s[static_cast<size_t>(j) * n + i]));
      }
    }
  }
  op.asymmetry = max_abs > 0.0 ? max_defect / max_abs : 0.0;

  op.S.assign(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      op.S[static_cast<size_t>(i) * n + j] =
          0.5 * (s[static_cast<size_t>(i) * n + j] +
                 s[static_cast<size_t>(j) * n + i]);
    }
  }

  SymEig eig = symmetric_eigendecompose(n, op.S);
  op.eigenvalues = std::move(eig.values);
  op.Q = std::move(eig.vectors);

  const double lambda_max = op.eigenvalues.back();
  op.lambda_min_raw = op.eigenvalues.front();
  if (op.lambda_min_raw < -kEigenvalueClampTol * lambda_max) {
    throw PositivityError(
        "DtN positivity violated beyond roundoff: discretization bug");
  }
  for (double& lam : op.eigenvalues) {
    if (lam < 0.0) {
      lam = 0.0;
      ++op.clamped_count;
    }
  }
  return op;
}

std::vector<double> apply(const DtnOperator& op, std::span<const double> f) {
  const int n = op.n();
  if (static_cast<int>(f.size()) != n) {
    throw std::invalid_argument("apply: data length must equal n_r");
  }
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    const double* row = op.L.data() + static_cast<size_t>(i) * n;
    for (int j = 0; j < n; ++j) acc += row[j] * f[j];
    out[i] = acc;
  }
  return out;
}

double quadratic_form(const DtnOperator& op, std::span<const double> f) {
  const std::vector<double> lf = apply(op, f);
  double acc = 0.0;
  for (int i = 0; i < op.n(); ++i) acc += op.w[i] * f[i] * lf[i];
  return acc;
}

double dirichlet_energy(const HarmonicField& field) {
  const LogRadialGrid& g = field.grid;
  const int N = g.n_r;
  const int M = g.n_theta;
  auto u = [&](int i, int j) { return field.values[g.index(i, j)]; };

  auto d_rho = [&](int i, int j) {
    if (i == 0) return (-3.0 * u(0, j) + 4.0 * u(1, j) - u(2, j)) / (2.0 * g.d_rho);
    if (i == N - 1)
      return (3.0 * u(N - 1, j) - 4.0 * u(N - 2, j) + u(N - 3, j)) / (2.0 * g.d_rho);
    return (u(i + 1, j) - u(i - 1, j)) / (2.0 * g.d_rho);
  };
  auto d_theta = [&](int i, int j) {
    if (j == 0) return (-3.0 * u(i, 0) + 4.0 * u(i, 1) - u(i, 2)) / (2.0 * g.d_theta);
    if (j == M - 1)
      return (3.0 * u(i, M - 1) - 4.0 * u(i, M - 2) + u(i, M - 3)) / (2.0 * g.d_theta);
    return (u(i, j + 1) - u(i, j - 1)) / (2.0 * g.d_theta);
  };

  double acc = 0.0;
  for (int i = 0; i < N; ++i) {
    const double wr = (i == 0 || i == N - 1) ? 0.5 * g.d_rho : g.d_rho;
    for (int j = 0; j < M; ++j) {
      const double wt = (j == 0 || j == M - 1) ? 0.5 * g.d_theta : g.d_theta;
      const double ur = d_rho(i, j);
      const double ut = d_theta(i, j);
      acc += wr * wt * (ur * ur + ut * ut);
    }
  }
  return acc;
}

Eigendecomposition eigendecompose(const DtnOperator& op) {
  return {op.eigenvalues, op.Q};
}

std::vector<double> to_spectral(const DtnOperator& op, std::span<const double> f) {
  const int n = op.n();
  std::vector<double> a(n, 0.0);
  for (int k = 0; k < n; ++k) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      acc += op.Q[static_cast<size_t>(i) * n + k] * op.sqrt_w[i] * f[i];
    }
    a[k] = acc;
  }
  return a;
}

std::vector<double> from_spectral(const DtnOperator& op, std::span<const double> a) {
  const int n = op.n();
  std::vector<double> f(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    const double* row = op.Q.data() + static_cast<size_t>(i) * n;
    for (int k = 0; k < n; ++k) acc += row[k] * a[k];
    f[i] = op.inv_sqrt_w[i] * acc;
  }
  return f;
}

std::vector<double> apply_spectral(const DtnOperator& op, std::span<const double> f) {
  std::vector<double> a = to_spectral(op, f);
  for (int k = 0; k < op.n(); ++k) a[k] *= op.eigenvalues[k];
  return from_spectral(op, a);
}

}  // namespace gendock
