// SPDX-License-Identifier: Apache-2.0
#include "core/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gendock {

WedgeGeometry::WedgeGeometry(double alpha_) : alpha(alpha_) {
  if (!(alpha > 0.0) || !(alpha <= std::numbers::pi) || !std::isfinite(alpha)) {
    throw std::invalid_argument("wedge angle must lie in (0, pi]");
  }
  mu0 = std::numbers::pi / (2.0 * alpha);
  gamma2_normal = {-std::sin(alpha), std::cos(alpha)};
}

PolarPoint to_polar(double x1, double x2) {
  if (x1 == 0.0 && x2 == 0.0) {
    throw std::domain_error("corner point (0,0) has no polar representation");
  }
  return {std::hypot(x1, x2), std::atan2(x2, x1)};
}

std::array<double, 2> from_polar(double r, double theta) {
  return {r * std::cos(theta), r * std::sin(theta)};
}

std::array<double, 2> rotate_to_gamma2_frame(double x1, double x2, double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return {-x1 * c - x2 * s, x1 * s - x2 * c};
}

int gamma1_flux_sign() { return -1; }

const char* gamma1_flux_description() {
  return "flux on Gamma1 is -(1/r) du/dtheta at theta = 0, the derivative "
         "along the outward normal (0,-1) of the fluid wedge 0 < theta < alpha";
}

}  // namespace gendock
