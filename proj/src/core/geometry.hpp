// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

namespace gendock {

/// Planar sector of interior angle alpha between the free-surface ray
/// Gamma1 = {x1 > 0, x2 = 0} and the rigid ray Gamma2 = {theta = alpha}.
struct WedgeGeometry {
  double alpha;                          // interior angle, (0, pi]
  double mu0;                            // corner exponent pi / (2 alpha)
  std::array<double, 2> gamma2_normal;   // (-sin alpha, cos alpha)

  explicit WedgeGeometry(double alpha);
};

struct PolarPoint {
  double r;
  double theta;  // branch (-pi, pi]
};

// Throws std::domain_error at the corner point (0, 0).
PolarPoint to_polar(double x1, double x2);
std::array<double, 2> from_polar(double r, double theta);

// Rotated frame in which Gamma2 becomes {y1 < 0, y2 = 0}:
//   y1 = -x1 cos a - x2 sin a,  y2 = x1 sin a - x2 cos a.
std::array<double, 2> rotate_to_gamma2_frame(double x1, double x2, double alpha);

// Flux convention on Gamma1: the operator maps Dirichlet data to the
// derivative of the harmonic extension taken in the direction pointing out
// of the fluid wedge, i.e. -(1/r) du/dtheta at theta = 0. This is the sign
// for which <Lf, f> equals the Dirichlet energy and is nonnegative.
int gamma1_flux_sign();                 // -1, applied to (1/r) du/dtheta
const char* gamma1_flux_description();

}  // namespace gendock
