// The C^p radial cutoff psi: 1 on |x| <= 1/2, 0 on |x| >= 1, built from
// v(t) = (1/A_p) int_0^t (s(1-s))^p ds with A_p = p!^2/(2p+1)!. The
// coefficients of v are computed in exact rational arithmetic (the binomial
// alternating sums cancel badly in floating point at p = 6).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zolo/multi_index.hpp"
#include "zolo/poly.hpp"
#include "zolo/rational.hpp"
#include "zolo/rng.hpp"

namespace zolo {

constexpr int kMaxBumpOrder = 6;

class BumpFunction {
public:
  explicit BumpFunction(int p) : p_(p) {
    if (p < 1 || p > kMaxBumpOrder) throw std::invalid_argument("bump order must be in 1..6");
    // A_p = int_0^1 (s(1-s))^p ds = p!^2 / (2p+1)!
    Rational ap = rational_factorial(p) * rational_factorial(p) / rational_factorial(2 * p + 1);
    a_p_ = ap.to_double();
    // v(t) = sum_k C(p,k)(-1)^k t^{p+k+1} / ((p+k+1) A_p)
    v_coeffs_rational_.assign(static_cast<std::size_t>(2 * p + 2), Rational(0));
    for (int k = 0; k <= p; ++k) {
      Rational c = Rational(binomial_i64(p, k) * (k % 2 == 0 ? 1 : -1), p + k + 1) / ap;
      v_coeffs_rational_[static_cast<std::size_t>(p + k + 1)] = c;
    }
    std::vector<double> vc(v_coeffs_rational_.size());
    for (std::size_t i = 0; i < vc.size(); ++i) vc[i] = v_coeffs_rational_[i].to_double();
    v_ = Poly(std::move(vc));
  }

  int order() const { return p_; }
  double normalizer() const { return a_p_; }
  const Poly& v() const { return v_; }
  const std::vector<Rational>& v_coeffs_rational() const { return v_coeffs_rational_; }

  double eval_v(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    // Clamp round-off: v maps [0,1] onto [0,1] monotonically.
    return std::min(1.0, std::max(0.0, v_(t)));
  }

  /// psi at a point of R^d (only |x|^2 matters).
  double eval_psi_r2(double r2) const {
    if (r2 <= 0.25) return 1.0;
    if (r2 >= 1.0) return 0.0;
    return 1.0 - eval_v((4.0 * r2 - 1.0) / 3.0);
  }
  double eval_psi(const std::vector<double>& x) const {
    double r2 = 0.0;
    for (double xi : x) r2 += xi * xi;
    return eval_psi_r2(r2);
  }
  double eval_psi_radial(double r) const { return eval_psi_r2(r * r); }

private:
  int p_;
  double a_p_;
  Poly v_;
  std::vector<Rational> v_coeffs_rational_;
};

inline double bump_derivative_constant(int p, int m) {
  // 4^p (2p+1) (16/3) (4/3)^{4p} (4p)^m
  return std::pow(4.0, p) * (2 * p + 1) * (16.0 / 3.0) * std::pow(4.0 / 3.0, 4 * p) *
         std::pow(4.0 * p, m);
}

struct CertReport {
  int p = 0;
  int d = 0;
  MultiIndex gamma;
  double max_estimate = 0.0;
  double bound = 0.0;
  double slack_factor = 1.1;
  bool pass = false;
};

namespace detail {

// Central finite difference of mixed order gamma with Richardson
// extrapolation (4 levels). f takes a point of R^d.
template <typename F>
double fd_mixed_derivative(F&& f, std::vector<double> x, const std::vector<int>& gamma, double h0) {
  const int d = static_cast<int>(x.size());
  // Tensor stencil: per axis k of order m, offsets (m/2 - j) h with weights
  // (-1)^j C(m,j) / h^m.
  auto eval_level = [&](double h) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) counts[static_cast<std::size_t>(k)] = static_cast<std::size_t>(gamma[static_cast<std::size_t>(k)]) + 1;
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    double total = 0.0;
    for (;;) {
      double w = 1.0;
      std::vector<double> pt = x;
      for (int k = 0; k < d; ++k) {
        int m = gamma[static_cast<std::size_t>(k)];
        int j = static_cast<int>(idx[static_cast<std::size_t>(k)]);
        w *= ((j % 2 == 0) ? 1.0 : -1.0) * static_cast<double>(binomial_i64(m, j));
        pt[static_cast<std::size_t>(k)] += (0.5 * m - j) * h;
      }
      total += w * f(pt);
      int k = 0;
      for (; k < d; ++k) {
        if (++idx[static_cast<std::size_t>(k)] < counts[static_cast<std::size_t>(k)]) break;
        idx[static_cast<std::size_t>(k)] = 0;
      }
      if (k == d) break;
    }
    int order = 0;
    for (int g : gamma) order += g;
    return total / std::pow(h, order);
  };

  // Richardson on the h^2 error expansion.
  const int levels = 4;
  std::vector<double> R(levels);
  for (int i = 0; i < levels; ++i) R[static_cast<std::size_t>(i)] = eval_level(h0 / std::pow(2.0, i));
  double fac = 4.0;
  for (int j = 1; j < levels; ++j) {
    for (int i = levels - 1; i >= j; --i)
      R[static_cast<std::size_t>(i)] =
          (fac * R[static_cast<std::size_t>(i)] - R[static_cast<std::size_t>(i - 1)]) / (fac - 1.0);
    fac *= 4.0;
  }
  return R[static_cast<std::size_t>(levels - 1)];
}

}  // namespace detail

/// Finite-difference certification of sup |D^gamma psi| against the explicit
/// derivative bound, sampling the shell 1/2 <= |x| <= 1 where psi bends.
inline CertReport certify_derivative_bound(const BumpFunction& b, int d, const MultiIndex& gamma,
                                           int samples, std::uint64_t seed) {
  const int p = b.order();
  const int m = gamma.length();
  if (gamma.dim() != d) throw std::invalid_argument("gamma dimension mismatch");
  if (m > p) throw std::invalid_argument("derivative order must not exceed the smoothness order");
  if (p > 3 || d > 3)
    throw std::invalid_argument("finite-difference certification supports p <= 3, d <= 3");

  CertReport rep;
  rep.p = p;
  rep.d = d;
  rep.gamma = gamma;
  rep.bound = bump_derivative_constant(p, m);

  auto f = [&](const std::vector<double>& x) { return b.eval_psi(x); };
  CounterRng rng(seed, 0xb0b0ULL);
  const double margin = 0.06;  // keep the full stencil inside the smooth shell
  double maxest = (m == 0) ? 1.0 : 0.0;  // psi attains 1 on the core
  for (int s = 0; s < samples; ++s) {
    std::vector<double> dir = rng.unit_vector(d);
    double r = 0.5 + margin + (0.5 - 2.0 * margin) * rng.next_double();
    std::vector<double> x(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) x[static_cast<std::size_t>(k)] = r * dir[static_cast<std::size_t>(k)];
    double est = (m == 0) ? f(x) : detail::fd_mixed_derivative(f, x, gamma.exponents, 1e-2);
    maxest = std::max(maxest, std::fabs(est));
  }
  rep.max_estimate = maxest;
  rep.pass = maxest <= rep.bound * rep.slack_factor;
  return rep;
}

/// Largest one-sided radial derivative (orders 1..p) just outside the seams
/// |x| = 1/2 and |x| = 1, relative to the order's derivative bound. Small
/// values certify C^p matching with the flat regions (where all derivatives
/// vanish identically).
inline double seam_mismatch(const BumpFunction& b, int max_order) {
  const int p = b.order();
  double worst = 0.0;
  for (int k = 1; k <= max_order; ++k) {
    for (double seam : {0.5, 1.0}) {
      // Approach the seam from the curved side.
      double sgn = (seam == 0.5) ? 1.0 : -1.0;
      double h = 2e-3;
      // One-sided FD with 2 Richardson levels on the O(h) expansion.
      auto one_sided = [&](double step) {
        double s = 0.0;
        for (int j = 0; j <= k; ++j)
          s += ((k - j) % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(binomial_i64(k, j)) *
               b.eval_psi_radial(seam + sgn * step * j);
        return s / std::pow(sgn * step, k);
      };
      double d1 = one_sided(h), d2 = one_sided(0.5 * h);
      double est = 2.0 * d2 - d1;
      worst = std::max(worst, std::fabs(est) / bump_derivative_constant(p, k));
    }
  }
  return worst;
}

/// CSV profile (radius, psi, FD psi') for plotting.
inline std::string bump_profile_csv(const BumpFunction& b, int n_points = 200) {
  std::ostringstream os;
  os << "radius,psi,dpsi_estimate\n";
  const double h = 1e-5;
  for (int i = 0; i <= n_points; ++i) {
    double r = 1.2 * static_cast<double>(i) / n_points;
    double dp = (b.eval_psi_radial(r + h) - b.eval_psi_radial(r - h)) / (2.0 * h);
    os << r << "," << b.eval_psi_radial(r) << "," << dp << "\n";
  }
  return os.str();
}

}  // namespace zolo
