// Exact Kantorovich W1 between discrete probability measures via successive
// shortest paths on the complete bipartite graph, with dual potentials kept
// for an optimality certificate (u_i + v_j <= c_ij, equality on the support).
#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "zolo/measure.hpp"
#include "zolo/zeta1d.hpp"

namespace zolo {

constexpr std::size_t kTransportSizeCap = 4096;

struct TransportPlan {
  struct Flow {
    int from = 0;
    int to = 0;
    double mass = 0.0;
  };
  std::vector<Flow> flows;
  double cost = 0.0;
  std::vector<double> dual_u;  // potentials on mu's support
  std::vector<double> dual_v;  // potentials on nu's support

  double dual_value(const std::vector<double>& mu_w, const std::vector<double>& nu_w) const {
    double s = 0.0;
    for (std::size_t i = 0; i < dual_u.size(); ++i) s += dual_u[i] * mu_w[i];
    for (std::size_t j = 0; j < dual_v.size(); ++j) s += dual_v[j] * nu_w[j];
    return s;
  }
};

namespace detail {
inline double euclid(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}
}  // namespace detail

inline TransportPlan w1_exact(const DiscreteMeasureND& mu, const DiscreteMeasureND& nu) {
  if (mu.dim() != nu.dim()) throw std::invalid_argument("w1_exact: dimension mismatch");
  for (double w : mu.weights())
    if (w < 0.0) throw std::invalid_argument("w1_exact: mu must be a probability measure");
  for (double w : nu.weights())
    if (w < 0.0) throw std::invalid_argument("w1_exact: nu must be a probability measure");
  if (std::fabs(mu.total_mass() - 1.0) > 1e-12 || std::fabs(nu.total_mass() - 1.0) > 1e-12)
    throw std::invalid_argument("w1_exact: total mass must be 1");
  if (mu.size() + nu.size() > kTransportSizeCap)
    throw std::length_error("w1_exact: point count exceeds solver cap");

  // Drop zero-weight atoms.
  std::vector<std::vector<double>> sp, tp;
  std::vector<double> sa, tb;
  std::vector<int> sidx, tidx;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu.weights()[i] > 0.0) {
      sp.push_back(mu.points()[i]);
      sa.push_back(mu.weights()[i]);
      sidx.push_back(static_cast<int>(i));
    }
  for (std::size_t j = 0; j < nu.size(); ++j)
    if (nu.weights()[j] > 0.0) {
      tp.push_back(nu.points()[j]);
      tb.push_back(nu.weights()[j]);
      tidx.push_back(static_cast<int>(j));
    }
  const std::size_t n = sp.size(), m = tp.size();

  std::vector<double> cost(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) cost[i * m + j] = detail::euclid(sp[i], tp[j]);

  std::vector<double> rem_a = sa, rem_b = tb;
  std::vector<double> pi_s(n, 0.0), pi_t(m, 0.0);  // node potentials
  std::map<std::pair<std::size_t, std::size_t>, double> flow;
  const double inf = std::numeric_limits<double>::infinity();
  const double mass_tol = 1e-14;

  auto remaining = [&] {
    double s = 0.0;
    for (double v : rem_a) s += v;
    return s;
  };

  std::size_t guard = 0;
  while (remaining() > mass_tol) {
    if (++guard > 4 * (n + m) * (n + m))
      throw std::runtime_error("w1_exact: augmentation limit exceeded");
    // Dijkstra over sources (0..n-1) and targets (n..n+m-1) with reduced costs.
    const std::size_t V = n + m;
    std::vector<double> dist(V, inf);
    std::vector<int> parent(V, -1);
    std::vector<bool> done(V, false);
    for (std::size_t i = 0; i < n; ++i)
      if (rem_a[i] > mass_tol) dist[i] = 0.0;
    for (;;) {
      std::size_t best = V;
      double bd = inf;
      for (std::size_t v = 0; v < V; ++v)
        if (!done[v] && dist[v] < bd) {
          bd = dist[v];
          best = v;
        }
      if (best == V) break;
      done[best] = true;
      if (best < n) {
        std::size_t i = best;
        for (std::size_t j = 0; j < m; ++j) {
          double rc = cost[i * m + j] + pi_s[i] - pi_t[j];
          if (rc < 0.0) rc = 0.0;  // clamp round-off
          if (dist[i] + rc < dist[n + j] - 1e-18) {
            dist[n + j] = dist[i] + rc;
            parent[n + j] = static_cast<int>(i);
          }
        }
      } else {
        std::size_t j = best - n;
        for (std::size_t i = 0; i < n; ++i) {
          auto it = flow.find({i, j});
          if (it == flow.end() || it->second <= mass_tol) continue;
          double rc = -cost[i * m + j] - pi_s[i] + pi_t[j];
          if (rc < 0.0) rc = 0.0;
          if (dist[n + j] + rc < dist[i] - 1e-18) {
            dist[i] = dist[n + j] + rc;
            parent[i] = static_cast<int>(n + j);
          }
        }
      }
    }
    // Pick the closest target with remaining demand.
    std::size_t tgt = V;
    double bd = inf;
    for (std::size_t j = 0; j < m; ++j)
      if (rem_b[j] > mass_tol && dist[n + j] < bd) {
        bd = dist[n + j];
        tgt = n + j;
      }
    if (tgt == V) throw std::runtime_error("w1_exact: no augmenting path (mass mismatch?)");

    // Bottleneck along the path.
    double push = rem_b[tgt - n];
    for (std::size_t v = tgt;;) {
      int pvi = parent[v];
      if (pvi < 0) {
        push = std::min(push, rem_a[v]);
        break;
      }
      std::size_t pv = static_cast<std::size_t>(pvi);
      if (v >= n && pv < n) {
        // forward arc, unlimited capacity
      } else {
        push = std::min(push, flow[{v, pv - n}]);
      }
      v = pv;
    }
    // Apply.
    for (std::size_t v = tgt;;) {
      int pvi = parent[v];
      if (pvi < 0) {
        rem_a[v] -= push;
        break;
      }
      std::size_t pv = static_cast<std::size_t>(pvi);
      if (v >= n && pv < n)
        flow[{pv, v - n}] += push;
      else
        flow[{v, pv - n}] -= push;
      v = pv;
    }
    rem_b[tgt - n] -= push;
    // Potential update keeps reduced costs nonnegative (distances capped at
    // the augmenting target's distance, the textbook-safe variant).
    for (std::size_t i = 0; i < n; ++i) pi_s[i] += std::min(dist[i], bd);
    for (std::size_t j = 0; j < m; ++j) pi_t[j] += std::min(dist[n + j], bd);
  }

  TransportPlan plan;
  plan.dual_u.assign(mu.size(), 0.0);
  plan.dual_v.assign(nu.size(), 0.0);
  for (std::size_t i = 0; i < n; ++i) plan.dual_u[static_cast<std::size_t>(sidx[i])] = -pi_s[i];
  for (std::size_t j = 0; j < m; ++j) plan.dual_v[static_cast<std::size_t>(tidx[j])] = pi_t[j];
  for (const auto& [key, f] : flow) {
    if (f <= mass_tol) continue;
    plan.flows.push_back({sidx[key.first], tidx[key.second], f});
    plan.cost += f * cost[key.first * m + key.second];
  }
  return plan;
}

/// 1D Kantorovich distance, int |F_mu - F_nu|, via the signed-CDF machinery.
inline double w1_1d(const DiscreteMeasure1D& mu, const DiscreteMeasure1D& nu) {
  DiscreteMeasure1D lambda = mu - nu;
  if (std::fabs(lambda.total_mass()) > 1e-9)
    throw std::invalid_argument("w1_1d: measures must have equal total mass");
  IteratedCdf F = signed_cdf(lambda);
  return F.pieces.integral_abs();
}

}  // namespace zolo
