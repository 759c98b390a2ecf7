// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "core/geometry.hpp"

namespace gendock {

/// Tensor grid for the truncated sector {r_min <= r <= r_max, 0 <= theta <= alpha},
/// uniform in rho = ln r and in theta. In (rho, theta) the sector is a
/// rectangle and the Laplacian is the constant-coefficient u_rr + u_tt, so a
/// uniform grid resolves the corner power behaviour r^(pi/2alpha) as a plain
/// exponential in rho.
struct LogRadialGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  int n_r = 0;      // radial nodes, >= 8
  int n_theta = 0;  // angular nodes, >= 8
  double alpha = 0.0;
  double d_rho = 0.0;
  double d_theta = 0.0;
  std::vector<double> rho;    // ln r_min + i d_rho
  std::vector<double> r;      // exp(rho)
  std::vector<double> theta;  // j d_theta

  // Quadrature weights for the surface pairing int_Gamma1 f g dx1: trapezoid
  // on the (nonuniform) radii, so the constant integrates to exactly
  // r_max - r_min.
  std::vector<double> surface_weights;

  LogRadialGrid() = default;
  LogRadialGrid(const WedgeGeometry& geom, double r_min, double r_max,
                int n_r, int n_theta);

  int index(int i, int j) const { return i * n_theta + j; }
};

}  // namespace gendock
