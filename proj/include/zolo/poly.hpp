// Dense univariate polynomials and piecewise-polynomial functions on the line.
// Root isolation is done by recursive monotone subdivision (roots of the
// derivative partition the interval into monotone pieces, then bisection),
// which is exact up to bisection tolerance for the degrees used here (<= ~15).
#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace zolo {

class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(double v) { return Poly({v}); }

  const std::vector<double>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  double operator()(double x) const {
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly{};
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
    return Poly(std::move(d));
  }

  // Antiderivative with zero constant term.
  Poly antiderivative() const {
    std::vector<double> a(c_.size() + 1, 0.0);
    for (std::size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<double>(k + 1);
    return Poly(std::move(a));
  }

  Poly operator+(const Poly& o) const {
    std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const { return *this + (o * -1.0); }
  Poly operator*(double s) const {
    std::vector<double> r = c_;
    for (double& v : r) v *= s;
    return Poly(std::move(r));
  }
  Poly operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly{};
    std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
  }

  // Taylor shift: returns q with q(x) = p(x + s).
  Poly shifted(double s) const {
    if (c_.empty()) return Poly{};
    // Synthetic division by (x - (-s)) repeatedly.
    std::vector<double> a = c_;
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n - 1; ++i)
      for (int j = n - 2; j >= i; --j) a[j] += s * a[j + 1];
    return Poly(std::move(a));
  }

  // q(x) = p(a*x + b), |a| scale on the argument.
  Poly composed_affine(double a, double b) const {
    Poly r = shifted(b);  // r(x) = p(x + b)
    std::vector<double> s = r.c_;
    double pw = 1.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      s[k] *= pw;
      pw *= a;
    }
    return Poly(std::move(s));
  }

  double integral(double a, double b) const {
    Poly F = antiderivative();
    return F(b) - F(a);
  }

  // Points in (a,b) where the polynomial changes sign, sorted.
  std::vector<double> sign_change_roots(double a, double b) const;

  // Exact integral of |p| over [a,b] (up to root-bisection tolerance).
  double integral_abs(double a, double b) const {
    if (b <= a || c_.empty()) return 0.0;
    std::vector<double> pts = sign_change_roots(a, b);
    pts.insert(pts.begin(), a);
    pts.push_back(b);
    Poly F = antiderivative();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += std::fabs(F(pts[i + 1]) - F(pts[i]));
    return total;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
  }
  std::vector<double> c_;  // ascending degree
};

inline std::vector<double> Poly::sign_change_roots(double a, double b) const {
  std::vector<double> roots;
  if (b <= a || c_.empty()) return roots;
  if (degree() == 0) return roots;

  // Partition [a,b] into monotone intervals by the derivative's sign changes.
  std::vector<double> pts;
  if (degree() >= 2) pts = derivative().sign_change_roots(a, b);
  pts.insert(pts.begin(), a);
  pts.push_back(b);

  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double lo = pts[i], hi = pts[i + 1];
    double flo = (*this)(lo), fhi = (*this)(hi);
    if (flo == 0.0 || fhi == 0.0) continue;  // endpoint touch, no interior crossing to isolate
    if ((flo < 0.0) == (fhi < 0.0)) continue;
    // Monotone on [lo,hi] with a sign change: bisect.
    for (int it = 0; it < 100 && hi - lo > 1e-15 * std::max(1.0, std::fabs(hi) + std::fabs(lo)); ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = (*this)(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

// One polynomial piece, valid on [lo, hi).
struct Piece {
  double lo = 0.0;
  double hi = 0.0;
  Poly poly;
};

// Piecewise polynomial function, zero outside its pieces. Pieces are kept
// sorted and disjoint after normalize().
class PiecewisePoly {
public:
  PiecewisePoly() = default;
  explicit PiecewisePoly(std::vector<Piece> pieces) : raw_(std::move(pieces)) { normalize(); }

  void add_piece(double lo, double hi, Poly p) {
    if (hi <= lo) return;
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::invalid_argument("piece interval must be finite");
    raw_.push_back({lo, hi, std::move(p)});
    normalized_ = false;
  }

  const std::vector<Piece>& pieces() const {
    const_cast<PiecewisePoly*>(this)->normalize();
    return raw_;
  }
  bool empty() const { return raw_.empty(); }

  double operator()(double x) const {
    for (const Piece& pc : pieces())
      if (x >= pc.lo && x < pc.hi) return pc.poly(x);
    return 0.0;
  }

  double integral() const {
    double s = 0.0;
    for (const Piece& pc : pieces()) s += pc.poly.integral(pc.lo, pc.hi);
    return s;
  }
  double integral_abs() const {
    double s = 0.0;
    for (const Piece& pc : pieces()) s += pc.poly.integral_abs(pc.lo, pc.hi);
    return s;
  }
  double moment(int k) const {
    double s = 0.0;
    std::vector<double> xk(static_cast<std::size_t>(k) + 1, 0.0);
    xk.back() = 1.0;
    Poly mono(xk);
    for (const Piece& pc : pieces()) s += (mono * pc.poly).integral(pc.lo, pc.hi);
    return s;
  }

  PiecewisePoly operator+(const PiecewisePoly& o) const {
    PiecewisePoly r = *this;
    for (const Piece& pc : o.pieces()) r.add_piece(pc.lo, pc.hi, pc.poly);
    r.normalize();
    return r;
  }
  PiecewisePoly operator*(double s) const {
    PiecewisePoly r;
    for (const Piece& pc : pieces()) r.add_piece(pc.lo, pc.hi, pc.poly * s);
    return r;
  }

  // Image under x -> a*x + c (as a function transported with a density's
  // change of variables: new(y) = old((y-c)/a) / |a|).
  PiecewisePoly pushforward_density(double a, double c) const {
    if (a == 0.0) throw std::invalid_argument("pushforward scale must be nonzero");
    PiecewisePoly r;
    for (const Piece& pc : pieces()) {
      double y0 = a * pc.lo + c, y1 = a * pc.hi + c;
      if (y0 > y1) std::swap(y0, y1);
      Poly q = pc.poly.composed_affine(1.0 / a, -c / a) * (1.0 / std::fabs(a));
      r.add_piece(y0, y1, std::move(q));
    }
    return r;
  }

  double support_lo() const { return pieces().empty() ? 0.0 : pieces().front().lo; }
  double support_hi() const { return pieces().empty() ? 0.0 : pieces().back().hi; }
  int max_degree() const {
    int d = -1;
    for (const Piece& pc : pieces()) d = std::max(d, pc.poly.degree());
    return d;
  }

private:
  // Rebuild over the union of all breakpoints, summing overlapping pieces.
  void normalize() {
    if (normalized_) return;
    normalized_ = true;
    if (raw_.empty()) return;
    std::vector<double> bp;
    bp.reserve(2 * raw_.size());
    for (const Piece& pc : raw_) {
      bp.push_back(pc.lo);
      bp.push_back(pc.hi);
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    std::vector<Piece> out;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
      double lo = bp[i], hi = bp[i + 1];
      double mid = 0.5 * (lo + hi);
      Poly sum;
      bool any = false;
      for (const Piece& pc : raw_) {
        if (mid >= pc.lo && mid < pc.hi) {
          sum = sum + pc.poly;
          any = true;
        }
      }
      if (any && !sum.is_zero()) out.push_back({lo, hi, std::move(sum)});
    }
    // Merge adjacent pieces with identical polynomials.
    std::vector<Piece> merged;
    for (Piece& pc : out) {
      if (!merged.empty() && merged.back().hi == pc.lo &&
          merged.back().poly.coeffs() == pc.poly.coeffs()) {
        merged.back().hi = pc.hi;
      } else {
        merged.push_back(std::move(pc));
      }
    }
    raw_ = std::move(merged);
  }

  std::vector<Piece> raw_;
  bool normalized_ = true;
};

}  // namespace zolo
