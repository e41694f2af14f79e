// Signed discrete measures on R^d and signed measures on the line with an
// optional piecewise-polynomial density. All values are immutable after
// construction; operations are pure functions.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zolo/multi_index.hpp"
#include "zolo/poly.hpp"

namespace zolo {

constexpr int kMaxDensityDegree = 8;

// ---------------------------------------------------------------------------
// DiscreteMeasure1D: atoms + piecewise-polynomial density on the line.
// ---------------------------------------------------------------------------
class DiscreteMeasure1D {
public:
  struct Atom {
    double location = 0.0;
    double weight = 0.0;
  };

  DiscreteMeasure1D() = default;
  DiscreteMeasure1D(std::vector<Atom> atoms, PiecewisePoly density = {})
      : atoms_(std::move(atoms)), density_(std::move(density)) {
    canonicalize();
    if (density_.max_degree() > kMaxDensityDegree)
      throw std::invalid_argument("density degree exceeds supported maximum");
  }

  static DiscreteMeasure1D dirac(double x, double w = 1.0) { return DiscreteMeasure1D({{x, w}}); }

  const std::vector<Atom>& atoms() const { return atoms_; }
  const PiecewisePoly& density() const { return density_; }
  bool has_density() const { return !density_.empty(); }

  double total_mass() const {
    double s = 0.0;
    for (const Atom& a : atoms_) s += a.weight;
    return s + density_.integral();
  }

  double total_variation() const {
    double s = 0.0;
    for (const Atom& a : atoms_) s += std::fabs(a.weight);
    return s + density_.integral_abs();
  }

  // int x^k dm, integer k >= 0.
  double moment(int k) const {
    double s = 0.0;
    for (const Atom& a : atoms_) s += a.weight * std::pow(a.location, k);
    if (has_density()) s += density_.moment(k);
    return s;
  }

  // int |x|^q d|m|, real q >= 1. Density part by adaptive splitting at 0.
  double abs_moment(double q) const {
    double s = 0.0;
    for (const Atom& a : atoms_) s += std::fabs(a.weight) * std::pow(std::fabs(a.location), q);
    for (const Piece& pc : density_.pieces()) {
      // Split at sign changes and at 0 so |x|^q |poly| is smooth per segment.
      std::vector<double> pts = pc.poly.sign_change_roots(pc.lo, pc.hi);
      pts.insert(pts.begin(), pc.lo);
      pts.push_back(pc.hi);
      if (pc.lo < 0.0 && pc.hi > 0.0) {
        pts.push_back(0.0);
        std::sort(pts.begin(), pts.end());
      }
      for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        s += std::fabs(gauss_abs_pow(pc.poly, q, pts[i], pts[i + 1]));
    }
    return s;
  }

  bool empty() const { return atoms_.empty() && !has_density(); }

  double support_lo() const {
    double lo = atoms_.empty() ? 0.0 : atoms_.front().location;
    if (has_density()) lo = atoms_.empty() ? density_.support_lo() : std::min(lo, density_.support_lo());
    return lo;
  }
  double support_hi() const {
    double hi = atoms_.empty() ? 0.0 : atoms_.back().location;
    if (has_density()) hi = atoms_.empty() ? density_.support_hi() : std::max(hi, density_.support_hi());
    return hi;
  }

  DiscreteMeasure1D operator+(const DiscreteMeasure1D& o) const {
    std::vector<Atom> a = atoms_;
    a.insert(a.end(), o.atoms_.begin(), o.atoms_.end());
    return DiscreteMeasure1D(std::move(a), density_ + o.density_);
  }
  DiscreteMeasure1D operator*(double s) const {
    std::vector<Atom> a = atoms_;
    for (Atom& at : a) at.weight *= s;
    return DiscreteMeasure1D(std::move(a), density_ * s);
  }
  DiscreteMeasure1D operator-(const DiscreteMeasure1D& o) const { return *this + o * -1.0; }

  /// Image under x -> a*x + c.
  DiscreteMeasure1D pushforward(double a, double c) const {
    if (a == 0.0) throw std::invalid_argument("pushforward scale must be nonzero");
    std::vector<Atom> at = atoms_;
    for (Atom& x : at) x.location = a * x.location + c;
    return DiscreteMeasure1D(std::move(at), density_.pushforward_density(a, c));
  }

private:
  // 16-point Gauss-Legendre for int |x|^q * poly over a sign-constant segment.
  static double gauss_abs_pow(const Poly& p, double q, double a, double b) {
    static const double xs[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                 0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
    static const double ws[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                 0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};
    double mid = 0.5 * (a + b), half = 0.5 * (b - a), s = 0.0;
    for (int i = 0; i < 8; ++i) {
      for (double sgn : {-1.0, 1.0}) {
        double x = mid + sgn * half * xs[i];
        s += ws[i] * std::pow(std::fabs(x), q) * p(x);
      }
    }
    return s * half;
  }

  void canonicalize() {
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    std::vector<Atom> merged;
    for (const Atom& a : atoms_) {
      if (!merged.empty() && merged.back().location == a.location)
        merged.back().weight += a.weight;
      else
        merged.push_back(a);
    }
    std::erase_if(merged, [](const Atom& a) { return a.weight == 0.0; });
    atoms_ = std::move(merged);
  }

  std::vector<Atom> atoms_;
  PiecewisePoly density_;
};

// ---------------------------------------------------------------------------
// DiscreteMeasureND: weighted point cloud in R^d, signed weights allowed.
// ---------------------------------------------------------------------------
class DiscreteMeasureND {
public:
  DiscreteMeasureND() = default;
  DiscreteMeasureND(int dim, std::vector<std::vector<double>> points, std::vector<double> weights,
                    bool probability = false)
      : dim_(dim), points_(std::move(points)), weights_(std::move(weights)), probability_(probability) {
    if (dim_ < 1) throw std::invalid_argument("dimension must be positive");
    if (points_.size() != weights_.size())
      throw std::invalid_argument("points and weights must have equal length");
    for (const auto& x : points_)
      if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("point dimension mismatch");
    canonicalize();
    if (probability_) {
      double s = 0.0;
      for (double w : weights_) {
        if (w < 0.0) throw std::invalid_argument("probability measure requires nonnegative weights");
        s += w;
      }
      if (std::fabs(s - 1.0) > 1e-12)
        throw std::invalid_argument("probability measure requires total mass 1");
    }
  }

  static DiscreteMeasureND dirac(std::vector<double> x, double w = 1.0) {
    int d = static_cast<int>(x.size());
    return DiscreteMeasureND(d, {std::move(x)}, {w});
  }

  int dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::vector<double>>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  bool is_probability() const { return probability_; }

  double total_mass() const {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
  }
  double total_variation() const {
    double s = 0.0;
    for (double w : weights_) s += std::fabs(w);
    return s;
  }

  DiscreteMeasureND operator-(const DiscreteMeasureND& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    std::vector<std::vector<double>> pts = points_;
    std::vector<double> ws = weights_;
    pts.insert(pts.end(), o.points_.begin(), o.points_.end());
    for (double w : o.weights_) ws.push_back(-w);
    return DiscreteMeasureND(dim_, std::move(pts), std::move(ws));
  }

private:
  void canonicalize() {
    std::vector<std::size_t> idx(points_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
    std::vector<std::vector<double>> pts;
    std::vector<double> ws;
    for (std::size_t i : idx) {
      if (!pts.empty() && pts.back() == points_[i])
        ws.back() += weights_[i];
      else {
        pts.push_back(points_[i]);
        ws.push_back(weights_[i]);
      }
    }
    points_ = std::move(pts);
    weights_ = std::move(ws);
  }

  int dim_ = 1;
  std::vector<std::vector<double>> points_;
  std::vector<double> weights_;
  bool probability_ = false;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

/// Projection x -> <x,theta> onto a unit direction.
inline DiscreteMeasure1D project(const DiscreteMeasureND& m, const std::vector<double>& theta) {
  if (static_cast<int>(theta.size()) != m.dim()) throw std::invalid_argument("direction dimension mismatch");
  if (std::fabs(norm2(theta) - 1.0) > 1e-12) throw std::invalid_argument("direction must be a unit vector");
  std::vector<DiscreteMeasure1D::Atom> atoms;
  atoms.reserve(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) atoms.push_back({dot(m.points()[j], theta), m.weights()[j]});
  return DiscreteMeasure1D(std::move(atoms));
}

/// int x^alpha dm.
inline double mixed_moment(const DiscreteMeasureND& m, const MultiIndex& alpha) {
  if (alpha.dim() != m.dim()) throw std::invalid_argument("multi-index dimension mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j) s += m.weights()[j] * alpha.power(m.points()[j]);
  return s;
}

/// int |x|^q d|m| (total-variation moment).
inline double abs_moment(const DiscreteMeasureND& m, double q) {
  if (q < 1.0) throw std::invalid_argument("abs_moment requires q >= 1");
  double s = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j)
    s += std::fabs(m.weights()[j]) * std::pow(norm2(m.points()[j]), q);
  return s;
}

inline double total_variation(const DiscreteMeasureND& m) { return m.total_variation(); }
inline double total_variation(const DiscreteMeasure1D& m) { return m.total_variation(); }

// ---------------------------------------------------------------------------
// JSON interchange
// ---------------------------------------------------------------------------

inline nlohmann::json to_json(const DiscreteMeasureND& m) {
  nlohmann::json j;
  j["dim"] = m.dim();
  j["points"] = m.points();
  j["weights"] = m.weights();
  j["probability"] = m.is_probability();
  return j;
}

inline DiscreteMeasureND measure_nd_from_json(const nlohmann::json& j) {
  return DiscreteMeasureND(j.at("dim").get<int>(),
                           j.at("points").get<std::vector<std::vector<double>>>(),
                           j.at("weights").get<std::vector<double>>(),
                           j.value("probability", false));
}

inline nlohmann::json to_json(const DiscreteMeasure1D& m) {
  nlohmann::json j;
  j["dim"] = 1;
  nlohmann::json pts = nlohmann::json::array(), ws = nlohmann::json::array();
  for (const auto& a : m.atoms()) {
    pts.push_back(std::vector<double>{a.location});
    ws.push_back(a.weight);
  }
  j["points"] = pts;
  j["weights"] = ws;
  nlohmann::json dens = nlohmann::json::array();
  for (const Piece& pc : m.density().pieces())
    dens.push_back({{"l", pc.lo}, {"u", pc.hi}, {"coeffs", pc.poly.coeffs()}});
  j["density_pieces"] = dens;
  return j;
}

inline DiscreteMeasure1D measure_1d_from_json(const nlohmann::json& j) {
  std::vector<DiscreteMeasure1D::Atom> atoms;
  const auto& pts = j.at("points");
  const auto& ws = j.at("weights");
  for (std::size_t i = 0; i < pts.size(); ++i)
    atoms.push_back({pts[i].at(0).get<double>(), ws[i].get<double>()});
  PiecewisePoly dens;
  if (j.contains("density_pieces"))
    for (const auto& p : j["density_pieces"])
      dens.add_piece(p.at("l").get<double>(), p.at("u").get<double>(),
                     Poly(p.at("coeffs").get<std::vector<double>>()));
  return DiscreteMeasure1D(std::move(atoms), std::move(dens));
}

}  // namespace zolo
