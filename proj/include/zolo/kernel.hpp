// The signed radial smoothing measure kappa: total mass 1, vanishing radial
// moments of orders 1..p-1, supported on the unit ball. Built from the
// Vandermonde system sum_i a_i (i/p)^k = delta_{k0} solved by progressive
// elimination; the density is a signed sum of uniform balls of radii i/p.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "zolo/bounds.hpp"
#include "zolo/linalg.hpp"
#include "zolo/measure.hpp"
#include "zolo/multi_index.hpp"

namespace zolo {

constexpr int kMaxKernelOrder = 6;

struct SmoothingKernel {
  int p = 1;
  int d = 1;
  std::vector<double> radii;    // b_i = i/p
  std::vector<double> weights;  // a_i, sum 1
  double tv_norm = 0.0;         // exact integral of |density|
  double density_sup = 0.0;     // exact sup of |density|

  // Signed density value at radius r (constant on each shell).
  double density_at(double r) const {
    if (r < 0.0 || r >= radii.back()) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < radii.size(); ++i)
      if (r < radii[i]) s += weights[i] / std::pow(radii[i], d);
    return s / omega_d(d);
  }
};

inline SmoothingKernel build_kernel(int p, int d) {
  if (p < 1 || p > kMaxKernelOrder) throw std::invalid_argument("kernel order must be in 1..6");
  if (d < 1) throw std::invalid_argument("kernel dimension must be positive");
  SmoothingKernel k;
  k.p = p;
  k.d = d;
  k.radii.resize(static_cast<std::size_t>(p));
  for (int i = 1; i <= p; ++i) k.radii[static_cast<std::size_t>(i - 1)] = static_cast<double>(i) / p;
  if (p == 1) {
    k.weights = {1.0};
  } else {
    std::vector<double> e1(static_cast<std::size_t>(p), 0.0);
    e1[0] = 1.0;
    k.weights = detail::solve_vandermonde_moment(k.radii, e1);
  }
  // Shell value S_j = sum_{i >= j} a_i / b_i^d; density on shell
  // (b_{j-1}, b_j) is S_j / omega_d, shell volume omega_d (b_j^d - b_{j-1}^d).
  double prev = 0.0, tv = 0.0, sup = 0.0;
  for (int j = 0; j < p; ++j) {
    double S = 0.0;
    for (int i = j; i < p; ++i)
      S += k.weights[static_cast<std::size_t>(i)] / std::pow(k.radii[static_cast<std::size_t>(i)], d);
    double bj = k.radii[static_cast<std::size_t>(j)];
    tv += std::fabs(S) * (std::pow(bj, d) - std::pow(prev, d));
    sup = std::max(sup, std::fabs(S) / omega_d(d));
    prev = bj;
  }
  k.tv_norm = tv;
  k.density_sup = sup;
  return k;
}

/// int_0^1 r^order d kappa_0(r) = (d/(order+d)) sum a_i b_i^order.
inline double kernel_radial_moment(const SmoothingKernel& k, int order) {
  if (order < 0) throw std::invalid_argument("moment order must be nonnegative");
  double s = 0.0;
  for (std::size_t i = 0; i < k.weights.size(); ++i) s += k.weights[i] * std::pow(k.radii[i], order);
  return static_cast<double>(k.d) / (order + k.d) * s;
}

namespace detail {
// int_{S^{d-1}} theta^alpha dsigma (normalized); 0 if any exponent is odd.
inline double sphere_moment(const MultiIndex& alpha, int d) {
  for (int e : alpha.exponents)
    if (e % 2 != 0) return 0.0;
  double lg = std::lgamma(0.5 * d) - 0.5 * d * std::log(M_PI) -
              std::lgamma(0.5 * (alpha.length() + d));
  for (int e : alpha.exponents) lg += std::lgamma(0.5 * (e + 1));
  return std::exp(lg);
}
}  // namespace detail

/// int x^alpha dkappa = radial moment times sphere moment; exactly 0 for
/// 1 <= |alpha| <= p-1.
inline double kernel_mixed_moment(const SmoothingKernel& k, const MultiIndex& alpha) {
  if (alpha.dim() != k.d) throw std::invalid_argument("multi-index dimension mismatch");
  int len = alpha.length();
  if (len >= 1 && len <= k.p - 1) return 0.0;
  return kernel_radial_moment(k, len) * detail::sphere_moment(alpha, k.d);
}

/// lambda * kappa_eps for a 1D kernel. Atoms become piecewise-constant bumps;
/// density pieces are convolved piecewise-exactly.
inline DiscreteMeasure1D convolve_1d(const DiscreteMeasure1D& lambda, const SmoothingKernel& k,
                                     double eps) {
  if (k.d != 1) throw std::invalid_argument("convolve_1d requires a kernel built with d = 1");
  if (eps <= 0.0) throw std::invalid_argument("convolution scale must be positive");

  // Scaled kernel density: piecewise constant on symmetric shells of
  // [-eps, eps], value v_j / eps on eps*(b_{j-1}, b_j) and its mirror.
  struct KPiece {
    double lo, hi, value;
  };
  std::vector<KPiece> kp;
  const int p = k.p;
  double prev = 0.0;
  for (int j = 0; j < p; ++j) {
    double S = 0.0;
    for (int i = j; i < p; ++i) S += k.weights[static_cast<std::size_t>(i)] / (2.0 * k.radii[static_cast<std::size_t>(i)]);
    double bj = k.radii[static_cast<std::size_t>(j)];
    double v = S / eps;
    if (v != 0.0) {
      kp.push_back({eps * prev, eps * bj, v});
      kp.push_back({-eps * bj, -eps * prev, v});
    }
    prev = bj;
  }

  PiecewisePoly dens;
  for (const auto& a : lambda.atoms())
    for (const KPiece& q : kp)
      dens.add_piece(a.location + q.lo, a.location + q.hi, Poly::constant(a.weight * q.value));

  for (const Piece& pc : lambda.density().pieces()) {
    Poly F = pc.poly.antiderivative();
    for (const KPiece& q : kp) {
      // h(x) = v * ( F(min(u, x - lo)) - F(max(l, x - hi)) ) on [l+lo, u+hi].
      double l = pc.lo, u = pc.hi, c = q.lo, dd = q.hi;
      double m1 = std::min(l + dd, u + c), m2 = std::max(l + dd, u + c);
      Poly Fxc = F.shifted(-c);   // F(x - c)
      Poly Fxd = F.shifted(-dd);  // F(x - d)
      if (l + c < m1) dens.add_piece(l + c, m1, (Fxc - Poly::constant(F(l))) * q.value);
      if (m1 < m2) {
        if (u + c <= l + dd)  // kernel piece wider: full integral, constant
          dens.add_piece(m1, m2, Poly::constant(q.value * (F(u) - F(l))));
        else
          dens.add_piece(m1, m2, (Fxc - Fxd) * q.value);
      }
      if (m2 < u + dd) dens.add_piece(m2, u + dd, (Poly::constant(F(u)) - Fxd) * q.value);
    }
  }
  return DiscreteMeasure1D({}, std::move(dens));
}

inline nlohmann::json to_json(const SmoothingKernel& k) {
  return {{"p", k.p}, {"d", k.d}, {"a", k.weights}, {"b", k.radii},
          {"tv", k.tv_norm}, {"density_sup", k.density_sup}};
}

}  // namespace zolo
