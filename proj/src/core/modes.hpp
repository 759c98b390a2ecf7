// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace gendock {

/// Separated-variable harmonic solutions on the wedge. Two families:
///
///  * sine family   r^mu_n sin(mu_n theta), mu_n = (n + 1/2) pi / alpha.
///    Vanishes on Gamma1, satisfies the Neumann condition on Gamma2 for the
///    quantized exponents only. These are the near-corner / far-field
///    building blocks of admissible solutions.
///
///  * cosine family r^mu cos(mu (alpha - theta)), any mu > 0. Satisfies the
///    Gamma2 Neumann condition for every mu and has a nonzero Gamma1 trace,
///    which makes it usable as a manufactured solution with exact flux.
struct ModeSpec {
  enum class Family { sine, cosine };
  Family family = Family::sine;
  int n = 0;          // sine family index
  double alpha = 0.0;
  double mu = 0.0;    // exponent; derived from n for the sine family

  static ModeSpec sine(int n, double alpha);
  static ModeSpec cosine(double mu, double alpha);
};

// (n + 1/2) pi / alpha
double mode_exponent(int n, double alpha);

// r^mu_n sin(mu_n theta)
double sine_mode_eval(const ModeSpec& spec, double r, double theta);

// r^mu cos(mu (alpha - theta))
double cosine_mode_eval(double mu, double alpha, double r, double theta);

struct DtnSample {
  double f;         // Dirichlet trace  r^mu cos(mu alpha)
  double lambda_f;  // flux            -mu sin(mu alpha) r^(mu-1)
};

// Exact (trace, flux) pair of the cosine mode on Gamma1 under the outward
// flux convention of geometry.hpp.
DtnSample exact_dtn_of_cosine_mode(double mu, double alpha, double r);

}  // namespace gendock
