// Max-sliced distance: sup over unit directions of the 1D distance between
// projections. Any finite search yields a certified lower bound of the true
// supremum; callers must treat the result as such.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zolo/measure.hpp"
#include "zolo/rng.hpp"
#include "zolo/transport.hpp"
#include "zolo/zeta1d.hpp"

namespace zolo {

struct DirectionBudget {
  int n_directions = 512;      // seeded uniform sphere samples
  bool heuristics = true;      // coordinate axes + normalized pairwise differences
  int refinement_iters = 40;   // step halvings of the sphere pattern search
  std::uint64_t seed = 0;
};

struct SlicedResult {
  double value = 0.0;
  std::vector<double> argmax_theta;
  int n_directions = 0;
  int refinement_iters = 0;
  std::uint64_t seed = 0;
};

/// 1D distance between projections along one direction (p=1: Kantorovich,
/// p>=2: Zolotarev of the difference).
inline double slice_distance(const DiscreteMeasureND& mu, const DiscreteMeasureND& nu, int p,
                             const std::vector<double>& theta, double moment_tol = 1e-9) {
  DiscreteMeasure1D pm = project(mu, theta), pn = project(nu, theta);
  if (p == 1) return w1_1d(pm, pn);
  return zeta_p_1d(pm - pn, p, moment_tol);
}

inline std::vector<double> sliced_profile(const DiscreteMeasureND& mu, const DiscreteMeasureND& nu,
                                          int p, const std::vector<std::vector<double>>& thetas,
                                          double moment_tol = 1e-9) {
  std::vector<double> out;
  out.reserve(thetas.size());
  for (const auto& th : thetas) out.push_back(slice_distance(mu, nu, p, th, moment_tol));
  return out;
}

namespace detail {
inline void normalize_inplace(std::vector<double>& v) {
  double n = norm2(v);
  if (n < 1e-300) throw std::invalid_argument("cannot normalize zero vector");
  for (double& x : v) x /= n;
}
}  // namespace detail

inline SlicedResult max_sliced(const DiscreteMeasureND& mu, const DiscreteMeasureND& nu, int p,
                               const DirectionBudget& budget = {}, double moment_tol = 1e-9) {
  if (mu.dim() != nu.dim()) throw std::invalid_argument("max_sliced: dimension mismatch");
  const int d = mu.dim();

  SlicedResult res;
  res.n_directions = budget.n_directions;
  res.refinement_iters = budget.refinement_iters;
  res.seed = budget.seed;
  res.argmax_theta.assign(static_cast<std::size_t>(d), 0.0);
  res.argmax_theta[0] = 1.0;
  res.value = -1.0;

  auto consider = [&](std::vector<double> theta) {
    double v = slice_distance(mu, nu, p, theta, moment_tol);
    if (v > res.value || (v == res.value && theta < res.argmax_theta)) {
      res.value = v;
      res.argmax_theta = std::move(theta);
    }
  };

  // (a) seeded sphere samples
  CounterRng rng(budget.seed, /*stream=*/0x51cedULL);
  for (int k = 0; k < budget.n_directions; ++k) consider(rng.unit_vector(d));

  // (b) coordinate axes and normalized pairwise point differences
  if (budget.heuristics) {
    for (int i = 0; i < d; ++i) {
      std::vector<double> e(static_cast<std::size_t>(d), 0.0);
      e[static_cast<std::size_t>(i)] = 1.0;
      consider(e);
    }
    std::vector<std::vector<double>> all = mu.points();
    all.insert(all.end(), nu.points().begin(), nu.points().end());
    const std::size_t cap = 64;  // pairwise candidates are O(n^2); cap the support scan
    const std::size_t nall = std::min(all.size(), cap);
    for (std::size_t i = 0; i < nall; ++i)
      for (std::size_t j = i + 1; j < nall; ++j) {
        std::vector<double> diff(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k)
          diff[static_cast<std::size_t>(k)] =
              all[i][static_cast<std::size_t>(k)] - all[j][static_cast<std::size_t>(k)];
        if (norm2(diff) < 1e-12) continue;
        detail::normalize_inplace(diff);
        consider(std::move(diff));
      }
  }
  if (res.value < 0.0) consider(res.argmax_theta);  // degenerate budget: evaluate e_1

  // (c) pattern search on the sphere from the best candidate
  double step = 0.5;
  for (int halving = 0; halving < budget.refinement_iters && d > 1;) {
    bool improved = false;
    for (int k = 0; k < d && !improved; ++k) {
      // tangent direction at theta along coordinate k
      std::vector<double> tang = res.argmax_theta;
      double proj = res.argmax_theta[static_cast<std::size_t>(k)];
      for (int i = 0; i < d; ++i) tang[static_cast<std::size_t>(i)] *= -proj;
      tang[static_cast<std::size_t>(k)] += 1.0;
      double tn = norm2(tang);
      if (tn < 1e-12) continue;
      for (double& x : tang) x /= tn;
      for (double sgn : {+1.0, -1.0}) {
        std::vector<double> cand = res.argmax_theta;
        for (int i = 0; i < d; ++i) cand[static_cast<std::size_t>(i)] += sgn * step * tang[static_cast<std::size_t>(i)];
        detail::normalize_inplace(cand);
        double v = slice_distance(mu, nu, p, cand, moment_tol);
        if (v > res.value) {
          res.value = v;
          res.argmax_theta = std::move(cand);
          improved = true;
          break;
        }
      }
    }
    if (!improved) {
      step *= 0.5;
      ++halving;
    }
  }
  return res;
}

}  // namespace zolo
