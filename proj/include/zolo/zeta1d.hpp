// Exact zeta_p for signed measures on the line.
//
// For a compactly supported signed measure lambda with vanishing moments of
// orders 0..p-1, the semi-norm equals the L1 norm of the p-th iterated
// antiderivative of its distribution function:
//   zeta_p(lambda) = int |Lambda_p(t)| dt,   Lambda_1(t) = lambda((-inf, t]).
// The integral is evaluated exactly on each polynomial piece by isolating the
// real roots and summing antiderivative increments.
//
// An independent oracle realizes the defining supremum directly: it builds a
// feasible test function u with u^(p) = sign(Lambda_p) on a grid, evaluating
// Lambda_p pointwise from the closed form
//   Lambda_p(t) = 1/(p-1)! * int (t-x)_+^{p-1} dlambda(x)
// without touching the piecewise machinery above.
#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "zolo/measure.hpp"
#include "zolo/poly.hpp"

namespace zolo {

constexpr int kMaxZetaOrder = 6;

/// Thrown when zeta_p is requested for a measure whose moment signature does
/// not vanish (the supremum is infinite in that case).
class MomentViolation : public std::runtime_error {
public:
  MomentViolation(int order, double residual)
      : std::runtime_error(make_message(order, residual)), order_(order), residual_(residual) {}
  int order() const { return order_; }
  double residual() const { return residual_; }

private:
  static std::string make_message(int order, double residual) {
    std::ostringstream os;
    os << "zeta_p undefined: moment of order " << order << " is " << residual
       << " (must vanish within tolerance)";
    return os.str();
  }
  int order_;
  double residual_;
};

inline void require_vanishing_moments(const DiscreteMeasure1D& lambda, int p, double tol = 1e-9) {
  for (int k = 0; k <= p - 1; ++k) {
    double mk = lambda.moment(k);
    if (std::fabs(mk) > tol) throw MomentViolation(k, mk);
  }
}

/// The k-th iterated antiderivative of the signed CDF, as a piecewise
/// polynomial on the support. Identically 0 left of the support; the value
/// carried past the right end is the (negated, scaled) moment defect.
struct IteratedCdf {
  int order = 0;
  PiecewisePoly pieces;
  double tail_value = 0.0;  // constant value right of the support
};

inline IteratedCdf signed_cdf(const DiscreteMeasure1D& lambda) {
  IteratedCdf out;
  out.order = 1;
  if (lambda.empty()) return out;

  std::vector<double> bp;
  for (const auto& a : lambda.atoms()) bp.push_back(a.location);
  for (const Piece& pc : lambda.density().pieces()) {
    bp.push_back(pc.lo);
    bp.push_back(pc.hi);
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

  // Breakpoints include every density-piece endpoint, so each elementary
  // interval [t0,t1) is either fully inside or fully outside any given piece.
  double acc = 0.0;  // lambda((-inf, t0])
  std::size_t next_atom = 0;
  const auto& atoms = lambda.atoms();
  for (std::size_t i = 0; i < bp.size(); ++i) {
    double t0 = bp[i];
    // Atoms located exactly at t0 jump at t0 (CDF right-continuous).
    while (next_atom < atoms.size() && atoms[next_atom].location <= t0)
      acc += atoms[next_atom++].weight;
    if (i + 1 == bp.size()) {
      out.tail_value = acc;
      break;
    }
    double t1 = bp[i + 1];
    Poly cum = Poly::constant(acc);
    for (const Piece& pc : lambda.density().pieces()) {
      if (pc.lo <= t0 && pc.hi >= t1) {
        Poly F = pc.poly.antiderivative();
        cum = cum + F - Poly::constant(F(t0));
        acc += F(t1) - F(t0);
      }
    }
    out.pieces.add_piece(t0, t1, cum);
  }
  return out;
}

inline IteratedCdf integrate_once(const IteratedCdf& in) {
  IteratedCdf out;
  out.order = in.order + 1;
  double acc = 0.0;
  double prev_hi = 0.0;
  bool first = true;
  for (const Piece& pc : in.pieces.pieces()) {
    // Normalization may have dropped identically-zero stretches of the input;
    // there the integral is constant, not absent.
    if (!first && pc.lo > prev_hi) out.pieces.add_piece(prev_hi, pc.lo, Poly::constant(acc));
    Poly F = pc.poly.antiderivative();
    out.pieces.add_piece(pc.lo, pc.hi, F - Poly::constant(F(pc.lo)) + Poly::constant(acc));
    acc += F(pc.hi) - F(pc.lo);
    prev_hi = pc.hi;
    first = false;
  }
  out.tail_value = acc;
  return out;
}

inline IteratedCdf iterated_cdf(const DiscreteMeasure1D& lambda, int k) {
  IteratedCdf cur = signed_cdf(lambda);
  for (int i = 1; i < k; ++i) cur = integrate_once(cur);
  return cur;
}

/// zeta_p of a signed measure with vanishing moment signature. Exact up to
/// root-isolation tolerance.
inline double zeta_p_1d(const DiscreteMeasure1D& lambda, int p, double moment_tol = 1e-9) {
  if (p < 1 || p > kMaxZetaOrder) throw std::invalid_argument("zeta order must be in 1..6");
  require_vanishing_moments(lambda, p, moment_tol);
  if (lambda.empty()) return 0.0;
  IteratedCdf Lp = iterated_cdf(lambda, p);
  return Lp.pieces.integral_abs();
}

namespace detail {

// Lambda_p(t) evaluated directly from the measure (independent of the
// piecewise representation). Density pieces handled by Gauss quadrature.
inline double iterated_cdf_direct(const DiscreteMeasure1D& lambda, int p, double t) {
  double inv_fact = 1.0;
  for (int k = 2; k <= p - 1; ++k) inv_fact /= k;
  double s = 0.0;
  for (const auto& a : lambda.atoms()) {
    if (a.location > t) continue;
    s += a.weight * (p == 1 ? 1.0 : std::pow(t - a.location, p - 1));
  }
  static const double xs[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                               0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                               0.9445750230732326, 0.9894009349916499};
  static const double ws[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                               0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                               0.0622535239386479, 0.0271524594117541};
  for (const Piece& pc : lambda.density().pieces()) {
    double hi = std::min(pc.hi, t);
    if (hi <= pc.lo) continue;
    double mid = 0.5 * (pc.lo + hi), half = 0.5 * (hi - pc.lo);
    double acc = 0.0;
    for (int i = 0; i < 8; ++i) {
      for (double sgn : {-1.0, 1.0}) {
        double x = mid + sgn * half * xs[i];
        acc += ws[i] * pc.poly(x) * (p == 1 ? 1.0 : std::pow(t - x, p - 1));
      }
    }
    s += acc * half;
  }
  return s * inv_fact;
}

}  // namespace detail

/// Grid oracle for zeta_p: feasible value of the defining supremum, converging
/// to zeta_p_1d from below as grid_step -> 0.
inline double zeta_p_sign_oracle(const DiscreteMeasure1D& lambda, int p, double grid_step,
                                 double moment_tol = 1e-9) {
  if (p < 1 || p > kMaxZetaOrder) throw std::invalid_argument("zeta order must be in 1..6");
  if (grid_step <= 0.0) throw std::invalid_argument("grid step must be positive");
  require_vanishing_moments(lambda, p, moment_tol);
  if (lambda.empty()) return 0.0;

  const double lo = lambda.support_lo();
  const double hi = lambda.support_hi();
  if (hi <= lo) return 0.0;
  const std::size_t n = static_cast<std::size_t>(std::ceil((hi - lo) / grid_step)) + 1;
  const double h = (hi - lo) / static_cast<double>(n - 1);

  auto Lp = [&](double t) { return detail::iterated_cdf_direct(lambda, p, t); };

  // Sign samples; near-zero values are treated as zero.
  std::vector<double> lam(n), sgn(n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    lam[i] = Lp(lo + h * static_cast<double>(i));
    scale = std::max(scale, std::fabs(lam[i]));
  }
  const double zero_tol = 1e-13 * std::max(scale, 1e-300);
  for (std::size_t i = 0; i < n; ++i)
    sgn[i] = std::fabs(lam[i]) <= zero_tol ? 0.0 : (lam[i] > 0.0 ? 1.0 : -1.0);

  // u1 = cumulative integral of the sign function; cells with a strict sign
  // change are split at the crossing located by bisection on Lambda_p.
  std::vector<double> u(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double t0 = lo + h * static_cast<double>(i), t1 = t0 + h;
    double cell;
    if (sgn[i] * sgn[i + 1] < 0.0) {
      double a = t0, b = t1, fa = lam[i];
      for (int it = 0; it < 60; ++it) {
        double m = 0.5 * (a + b), fm = Lp(m);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      double tau = 0.5 * (a + b);
      cell = sgn[i] * (tau - t0) + sgn[i + 1] * (t1 - tau);
    } else {
      cell = 0.5 * (sgn[i] + sgn[i + 1]) * h;
    }
    u[i + 1] = u[i] + cell;
  }
  // Remaining p-1 integrations by cumulative trapezoid.
  for (int k = 2; k <= p; ++k) {
    std::vector<double> v(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) v[i + 1] = v[i] + 0.5 * (u[i] + u[i + 1]) * h;
    u = std::move(v);
  }

  auto eval_u = [&](double x) {
    double s = (x - lo) / h;
    if (s <= 0.0) return u.front();
    if (s >= static_cast<double>(n - 1)) return u.back();
    std::size_t i = static_cast<std::size_t>(s);
    double f = s - static_cast<double>(i);
    return u[i] * (1.0 - f) + u[i + 1] * f;
  };

  double val = 0.0;
  for (const auto& a : lambda.atoms()) val += a.weight * eval_u(a.location);
  for (const Piece& pc : lambda.density().pieces()) {
    // Trapezoid over the grid cells covering the piece.
    std::size_t i0 = static_cast<std::size_t>(std::max(0.0, std::floor((pc.lo - lo) / h)));
    std::size_t i1 = static_cast<std::size_t>(
        std::min(static_cast<double>(n - 1), std::ceil((pc.hi - lo) / h)));
    for (std::size_t i = i0; i + 1 <= i1; ++i) {
      double a2 = std::max(pc.lo, lo + h * static_cast<double>(i));
      double b2 = std::min(pc.hi, lo + h * static_cast<double>(i + 1));
      if (b2 <= a2) continue;
      double fa = pc.poly(a2) * eval_u(a2), fb = pc.poly(b2) * eval_u(b2);
      val += 0.5 * (fa + fb) * (b2 - a2);
    }
  }
  return std::fabs(val);
}

}  // namespace zolo
