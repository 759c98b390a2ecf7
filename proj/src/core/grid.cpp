// SPDX-License-Identifier: Apache-2.0
#include "core/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace gendock {

LogRadialGrid::LogRadialGrid(const WedgeGeometry& geom, double r_min_,
                             double r_max_, int n_r_, int n_theta_)
    : r_min(r_min_), r_max(r_max_), n_r(n_r_), n_theta(n_theta_),
      alpha(geom.alpha) {
  if (!(r_min > 0.0) || !(r_max > r_min)) {
    throw std::invalid_argument("grid requires 0 < r_min < r_max");
  }
  if (n_r < 8 || n_theta < 8) {
    throw std::invalid_argument("grid requires n_r >= 8 and n_theta >= 8");
  }
  const double rho0 = std::log(r_min);
  const double rho1 = std::log(r_max);
  d_rho = (rho1 - rho0) / (n_r - 1);
  d_theta = alpha / (n_theta - 1);

  rho.resize(n_r);
  r.resize(n_r);
  for (int i = 0; i < n_r; ++i) {
    rho[i] = rho0 + i * d_rho;
    r[i] = std::exp(rho[i]);
  }
  // Pin the endpoints so truncation radii are reproduced exactly.
  rho[n_r - 1] = rho1;
  r[0] = r_min;
  r[n_r - 1] = r_max;

  theta.resize(n_theta);
  for (int j = 0; j < n_theta; ++j) theta[j] = j * d_theta;
  theta[n_theta - 1] = alpha;

  surface_weights.resize(n_r);
  surface_weights[0] = 0.5 * (r[1] - r[0]);
  for (int i = 1; i < n_r - 1; ++i) {
    surface_weights[i] = 0.5 * (r[i + 1] - r[i - 1]);
  }
  surface_weights[n_r - 1] = 0.5 * (r[n_r - 1] - r[n_r - 2]);
}

}  // namespace gendock
