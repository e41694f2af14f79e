// Closed-form exponents and bound expressions from the quantitative
// Cramer-Wold inequalities. The absolute constants are inputs, never baked
// in; experiments report implied constants instead.
#pragma once

#include <cmath>
#include <stdexcept>

namespace zolo {

struct BoundParams {
  int p = 1;
  double q = 2.0;
  int d = 1;
  double b = 1.0;
};

inline double log_omega_d(int d) {
  // log of the d-dimensional unit-ball volume, pi^{d/2} / Gamma(d/2 + 1)
  return 0.5 * d * std::log(M_PI) - std::lgamma(0.5 * d + 1.0);
}
inline double omega_d(int d) { return std::exp(log_omega_d(d)); }

/// beta = 2 / (2 + d q/(q-1)), the exponent of the W1 projection bound.
inline double beta_thm_1_1(double q, int d) {
  if (q <= 1.0) throw std::invalid_argument("beta_thm_1_1 requires q > 1");
  return 2.0 / (2.0 + d * q / (q - 1.0));
}

/// beta = 2 / (2 + d q / (p (q-p))); reduces to beta_thm_1_1 at p = 1.
inline double beta_thm_1_2(int p, double q, int d) {
  if (p < 1) throw std::invalid_argument("beta_thm_1_2 requires p >= 1");
  if (q <= p) throw std::invalid_argument("beta_thm_1_2 requires q > p");
  return 2.0 / (2.0 + d * q / (p * (q - p)));
}

/// sigma = (q-p)(d/2) / (q-p + d/2); satisfies
/// (p/(sigma+p)) * (q-p)/(q-p + d/2) = beta.
inline double sigma_exponent(int p, double q, int d) {
  if (q <= p) throw std::invalid_argument("sigma_exponent requires q > p");
  double h = 0.5 * d;
  return (q - p) * h / (q - p + h);
}

/// c * b^{1-beta} * S^beta with S the max-sliced W1 value.
inline double rhs_thm_1_1(const BoundParams& params, double S, double c) {
  double beta = beta_thm_1_1(params.q, params.d);
  return c * std::pow(params.b, 1.0 - beta) * std::pow(S, beta);
}

/// (c d)^p * b^{1-beta} * S^beta with S the max-sliced zeta_p value.
inline double rhs_thm_1_2(const BoundParams& params, double S, double c) {
  double beta = beta_thm_1_2(params.p, params.q, params.d);
  return std::pow(c * params.d, params.p) * std::pow(params.b, 1.0 - beta) * std::pow(S, beta);
}

/// (1/p!) d^{p/2} * int |x|^p d|lambda| -- the universal zeta_p upper bound.
inline double zeta_upper_cor_2_4(double lambda_abs_p_moment, int p, int d) {
  double fact = 1.0;
  for (int k = 2; k <= p; ++k) fact *= k;
  return std::pow(static_cast<double>(d), 0.5 * p) * lambda_abs_p_moment / fact;
}

}  // namespace zolo
