// SPDX-License-Identifier: Apache-2.0
#include "core/corner.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace gendock {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_angle(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= std::numbers::pi)) {
    throw std::invalid_argument("angle must lie in (0, pi]");
  }
}

// arg in [0, 2 pi); the principal branch would fold beta1 to -alpha.
double arg_0_2pi(std::complex<double> z) {
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  return a;
}

std::complex<double> mu_of_lambda(double alpha, std::complex<double> lambda) {
  return (std::sin(alpha) - lambda * std::cos(alpha)) /
         (-std::cos(alpha) - lambda * std::sin(alpha));
}

}  // namespace

std::pair<double, double> betas(double alpha) {
  require_angle(alpha);
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  // i beta_k = ln(cos a + lambda_k sin a); both arguments are unimodular so
  // beta_k is the chosen branch argument.
  const double beta1 = arg_0_2pi(std::complex<double>(c, -s));
  const double beta2 = arg_0_2pi(std::complex<double>(c, s));
  const double pi2 = 2.0 * std::numbers::pi;
  if (std::fabs(beta1 - (pi2 - alpha)) > 1e-12 || std::fabs(beta2 - alpha) > 1e-12) {
    throw std::runtime_error("complex-log branch violated the beta identities");
  }
  return {beta1, beta2};
}

std::complex<double> b20(double alpha) {
  require_angle(alpha);
  const double nu1 = -std::sin(alpha);
  const double nu2 = std::cos(alpha);
  const double re = nu1 * std::sin(alpha) - nu2 * std::cos(alpha);
  const double im = nu2 * std::sin(alpha) + nu1 * std::cos(alpha);
  const std::complex<double> b2_plus(re, -im);
  const std::complex<double> b2_minus(re, im);
  if (std::abs(b2_plus) < 1e-14) {
    throw std::runtime_error("degenerate Gamma2 normal");
  }
  const std::complex<double> result = -b2_minus / b2_plus;
  if (std::abs(result - std::complex<double>(-1.0, 0.0)) > 1e-12) {
    throw std::runtime_error("b20 deviates from its closed form -1");
  }
  return result;
}

std::complex<double> M0(std::complex<double> z, double alpha) {
  const auto [beta1, beta2] = betas(alpha);
  const double pi2 = 2.0 * std::numbers::pi;
  return -b20(alpha) + std::exp(kI * z * (pi2 - beta1 + beta2));
}

CornerSymbolReport corner_check(double alpha, double s, double tau_max,
                                int n_samples) {
  require_angle(alpha);
  if (n_samples < 2) throw std::invalid_argument("need at least 2 samples");
  if (!(tau_max > 0.0)) throw std::invalid_argument("tau_max must be positive");

  CornerSymbolReport rep;
  rep.alpha = alpha;
  rep.s = s;
  rep.mu1 = mu_of_lambda(alpha, rep.lambda1);
  rep.mu2 = mu_of_lambda(alpha, rep.lambda2);
  std::tie(rep.beta1, rep.beta2) = betas(alpha);
  rep.b20 = b20(alpha);
  rep.tau_min = -tau_max;
  rep.tau_max = tau_max;
  rep.n_samples = n_samples;

  const std::complex<double> minus_b20 = -rep.b20;
  const double pi2 = 2.0 * std::numbers::pi;
  const double exponent_scale = pi2 - rep.beta1 + rep.beta2;  // = 2 alpha
  double min_abs = std::numeric_limits<double>::infinity();
  const double dtau = 2.0 * tau_max / (n_samples - 1);
  for (int k = 0; k < n_samples; ++k) {
    const double tau = -tau_max + k * dtau;
    const std::complex<double> z(1.0 - s, tau);
    const std::complex<double> value = minus_b20 + std::exp(kI * z * exponent_scale);
    min_abs = std::min(min_abs, std::abs(value));
  }
  rep.min_abs_m0 = min_abs;
  rep.pass = min_abs > 1e-9;
  return rep;
}

std::vector<std::pair<double, double>> corner_profile(double alpha, double s,
                                                      double tau_max,
                                                      int n_samples) {
  require_angle(alpha);
  if (n_samples < 2) throw std::invalid_argument("need at least 2 samples");
  if (!(tau_max > 0.0)) throw std::invalid_argument("tau_max must be positive");
  std::vector<std::pair<double, double>> out;
  out.reserve(n_samples);
  const double dtau = 2.0 * tau_max / (n_samples - 1);
  for (int k = 0; k < n_samples; ++k) {
    const double tau = -tau_max + k * dtau;
    out.emplace_back(tau, std::abs(M0(std::complex<double>(1.0 - s, tau), alpha)));
  }
  return out;
}

}  // namespace gendock
