// Generation of moment-matched probability-measure pairs: fix a random
// support, solve the underdetermined moment system for the weights by a
// least-norm correction of the uniform weights, reject if negative, retry.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zolo/linalg.hpp"
#include "zolo/measure.hpp"
#include "zolo/multi_index.hpp"
#include "zolo/rng.hpp"

namespace zolo {

class MomentMatchInfeasible : public std::runtime_error {
public:
  explicit MomentMatchInfeasible(int attempts)
      : std::runtime_error("moment_matched_pair: weight solve produced negative weights in all " +
                           std::to_string(attempts) + " attempts") {}
};

/// Two probability measures on n atoms each whose mixed moments agree for all
/// |alpha| <= p-1 (within 1e-9). Deterministic in the seed.
inline std::pair<DiscreteMeasureND, DiscreteMeasureND> moment_matched_pair(std::uint64_t seed,
                                                                           int d, int p, int n,
                                                                           int max_attempts = 50) {
  if (d < 1 || p < 1 || n < 1) throw std::invalid_argument("moment_matched_pair: bad parameters");
  std::vector<MultiIndex> alphas = multi_indices_up_to(d, p - 1);
  const std::size_t K = alphas.size();
  if (static_cast<std::size_t>(n) < K + 1)
    throw std::invalid_argument("moment_matched_pair: n must exceed the constraint count");

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    CounterRng rng(seed, static_cast<std::uint64_t>(attempt));

    // mu: random Gaussian support with Dirichlet(1) weights.
    std::vector<std::vector<double>> mu_pts(static_cast<std::size_t>(n));
    std::vector<double> mu_w(static_cast<std::size_t>(n));
    double wsum = 0.0;
    for (int j = 0; j < n; ++j) {
      mu_pts[static_cast<std::size_t>(j)] = rng.gaussian_vector(d);
      double e = -std::log(1.0 - rng.next_double());
      mu_w[static_cast<std::size_t>(j)] = e;
      wsum += e;
    }
    for (double& w : mu_w) w /= wsum;
    DiscreteMeasureND mu(d, mu_pts, mu_w, /*probability=*/true);

    std::vector<double> target(K);
    for (std::size_t k = 0; k < K; ++k) target[k] = mixed_moment(mu, alphas[k]);

    // nu support, weights from the constrained least-norm solve
    //   min ||w - 1/n||  s.t.  A w = target.
    std::vector<std::vector<double>> nu_pts(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) nu_pts[static_cast<std::size_t>(j)] = rng.gaussian_vector(d);

    std::vector<double> A(K * static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < K; ++k)
      for (int j = 0; j < n; ++j)
        A[k * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
            alphas[k].power(nu_pts[static_cast<std::size_t>(j)]);

    std::vector<double> resid(K);
    for (std::size_t k = 0; k < K; ++k) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += A[k * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
      resid[k] = target[k] - s / static_cast<double>(n);
    }
    std::vector<double> G(K * K, 0.0);
    for (std::size_t r = 0; r < K; ++r)
      for (std::size_t c = 0; c < K; ++c) {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
          s += A[r * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] *
               A[c * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
        G[r * K + c] = s;
      }
    std::vector<double> y;
    try {
      y = detail::solve_dense(G, resid);
    } catch (const std::runtime_error&) {
      continue;  // degenerate support, resample
    }
    std::vector<double> w(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
    for (int j = 0; j < n; ++j)
      for (std::size_t k = 0; k < K; ++k)
        w[static_cast<std::size_t>(j)] +=
            A[k * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] * y[k];

    bool feasible = true;
    for (double v : w)
      if (v < -1e-12) {
        feasible = false;
        break;
      }
    if (!feasible) continue;
    double s = 0.0;
    for (double& v : w) {
      if (v < 0.0) v = 0.0;
      s += v;
    }
    for (double& v : w) v /= s;

    DiscreteMeasureND nu(d, nu_pts, w, /*probability=*/true);
    bool ok = true;
    for (std::size_t k = 0; k < K; ++k)
      if (std::fabs(mixed_moment(nu, alphas[k]) - target[k]) > 1e-9) {
        ok = false;
        break;
      }
    if (ok) return {std::move(mu), std::move(nu)};
  }
  throw MomentMatchInfeasible(max_attempts);
}

}  // namespace zolo
