// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace gendock {

/// Unique-solvability check for the mixed wedge problem: the symbol
/// M0(z) = -b20 + exp(i z (2 pi - beta1 + beta2)) must not vanish on the
/// critical line z = (1 - s) + i tau. For the identity/normal-derivative
/// boundary pair the algebra collapses: b20 = -1 for every alpha, so at
/// s = 1 the sampled values are 1 + exp(-2 alpha tau) >= 1.
struct CornerSymbolReport {
  double alpha = 0.0;
  double s = 1.0;
  std::complex<double> lambda1{0.0, -1.0};
  std::complex<double> lambda2{0.0, 1.0};
  std::complex<double> mu1;
  std::complex<double> mu2;
  double beta1 = 0.0;  // 2 pi - alpha
  double beta2 = 0.0;  // alpha
  std::complex<double> b20;
  double tau_min = 0.0;
  double tau_max = 0.0;
  int n_samples = 0;
  double min_abs_m0 = 0.0;
  bool pass = false;

  // Boundary operators are fixed to (identity, d/dnu).
  static constexpr int m1 = 0;
  static constexpr int m2 = 1;
};

// beta_k = -i ln(cos a + lambda_k sin a) with the log argument taken in
// [0, 2 pi); asserts the closed forms (2 pi - a, a) to 1e-12 and throws on a
// branch violation.
std::pair<double, double> betas(double alpha);

// -B2^- / B2^+ from the Gamma2 normal; equals -1 identically, asserted to 1e-12.
std::complex<double> b20(double alpha);

std::complex<double> M0(std::complex<double> z, double alpha);

CornerSymbolReport corner_check(double alpha, double s, double tau_max,
                                int n_samples);

// Sampled (tau, |M0((1-s) + i tau)|) on the same grid corner_check scans.
std::vector<std::pair<double, double>> corner_profile(double alpha, double s,
                                                      double tau_max,
                                                      int n_samples);

}  // namespace gendock
