// SPDX-License-Identifier: Apache-2.0
#include "core/modes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gendock {

namespace {
void require_angle(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= std::numbers::pi)) {
    throw std::invalid_argument("mode angle must lie in (0, pi]");
  }
}
}  // namespace

ModeSpec ModeSpec::sine(int n, double alpha) {
  require_angle(alpha);
  ModeSpec s;
  s.family = Family::sine;
  s.n = n;
  s.alpha = alpha;
  s.mu = mode_exponent(n, alpha);
  return s;
}

ModeSpec ModeSpec::cosine(double mu, double alpha) {
  require_angle(alpha);
  if (!(mu > 0.0)) throw std::invalid_argument("cosine mode exponent must be positive");
  ModeSpec s;
  s.family = Family::cosine;
  s.n = 0;
  s.alpha = alpha;
  s.mu = mu;
  return s;
}

double mode_exponent(int n, double alpha) {
  require_angle(alpha);
  return (n + 0.5) * std::numbers::pi / alpha;
}

double sine_mode_eval(const ModeSpec& spec, double r, double theta) {
  return std::pow(r, spec.mu) * std::sin(spec.mu * theta);
}

double cosine_mode_eval(double mu, double alpha, double r, double theta) {
  return std::pow(r, mu) * std::cos(mu * (alpha - theta));
}

DtnSample exact_dtn_of_cosine_mode(double mu, double alpha, double r) {
  return {std::pow(r, mu) * std::cos(mu * alpha),
          -mu * std::sin(mu * alpha) * std::pow(r, mu - 1.0)};
}

}  // namespace gendock
