// Experiment harness: seeded random measure families, campaign runners for
// the theorem-level inequalities, the quantitative lemma suite, and
// JSON/CSV report emission. Every row is reproducible from
// (config, master seed, trial index).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zolo/bounds.hpp"
#include "zolo/bump.hpp"
#include "zolo/kernel.hpp"
#include "zolo/measure.hpp"
#include "zolo/moment_match.hpp"
#include "zolo/rng.hpp"
#include "zolo/sliced.hpp"
#include "zolo/spectral.hpp"
#include "zolo/transport.hpp"
#include "zolo/zeta1d.hpp"

namespace zolo {

// Calibrated implied-constant ceilings, committed from one documented run
// (thm11 and thm12 p=1: d in {2,3}, q=2, n=8, 512 directions, 100 trials,
// seed 1; thm12 p=2 d=1: q=3, n=6, 100 trials, seed 1). Tests assert
// against these with 2x headroom; regressions, not absolutes, are the gate.
constexpr double kCalibThm11MaxC = 1.1757;
constexpr double kCalibThm12P1MaxC = 0.5348;
constexpr double kCalibThm12P2D1MaxC = 0.9398;

enum class AtomLaw { Gaussian, UniformCube, Pareto };
enum class WeightLaw { Uniform, Dirichlet };

inline std::string to_string(AtomLaw law) {
  switch (law) {
    case AtomLaw::Gaussian: return "gaussian";
    case AtomLaw::UniformCube: return "uniform_cube";
    case AtomLaw::Pareto: return "pareto";
  }
  return "?";
}

struct ExperimentConfig {
  std::string kind;  // thm11 | thm12_p1 | lemma_suite | kernel_audit | bump_audit | smoothing_audit | spectral_audit
  int p = 1;
  double q = 2.0;
  int d = 2;
  int n_atoms = 8;
  int n_trials = 100;
  std::uint64_t seed = 1;
  DirectionBudget budget;
  AtomLaw atom_law = AtomLaw::Gaussian;
  WeightLaw weight_law = WeightLaw::Uniform;
  double pareto_index_margin = 1.0;  // Pareto tail index = q + margin, keeps q-th moments finite
  std::string out_path;

  nlohmann::json to_json() const {
    return {{"kind", kind},     {"p", p},           {"q", q},
            {"d", d},           {"n_atoms", n_atoms}, {"n_trials", n_trials},
            {"seed", seed},     {"n_directions", budget.n_directions},
            {"refinement_iters", budget.refinement_iters},
            {"atom_law", zolo::to_string(atom_law)},
            {"weight_law", weight_law == WeightLaw::Uniform ? "uniform" : "dirichlet"}};
  }
};

struct VerificationReport {
  static constexpr int kSchemaVersion = 1;

  std::string kind;
  nlohmann::json config;
  std::vector<nlohmann::json> rows;
  nlohmann::json summary;
  bool all_pass = true;

  void add_row(nlohmann::json row) {
    if (row.contains("pass") && !row["pass"].get<bool>()) all_pass = false;
    rows.push_back(std::move(row));
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind;
    j["config"] = config;
    j["rows"] = rows;
    j["summary"] = summary;
    j["all_pass"] = all_pass;
    j["environment"] = environment_fingerprint();
    return j;
  }

  static VerificationReport from_json(const nlohmann::json& j) {
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != kSchemaVersion)
      throw std::runtime_error("report schema version mismatch");
    VerificationReport r;
    r.kind = j.at("kind").get<std::string>();
    r.config = j.at("config");
    for (const auto& row : j.at("rows")) r.rows.push_back(row);
    r.summary = j.at("summary");
    r.all_pass = j.at("all_pass").get<bool>();
    return r;
  }

  std::string to_csv() const {
    // Flat CSV over the union of scalar row keys, deterministic column order.
    std::vector<std::string> cols;
    for (const auto& row : rows)
      for (auto it = row.begin(); it != row.end(); ++it)
        if (it.value().is_number() || it.value().is_boolean() || it.value().is_string())
          if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
    std::sort(cols.begin(), cols.end());
    std::ostringstream os;
    for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        os << (c ? "," : "");
        if (row.contains(cols[c])) {
          const auto& v = row[cols[c]];
          if (v.is_string())
            os << v.get<std::string>();
          else
            os << v.dump();
        }
      }
      os << "\n";
    }
    return os.str();
  }

  void write(const std::string& path_base) const {
    {
      std::ofstream f(path_base + ".json");
      f << to_json().dump(2) << "\n";
    }
    {
      std::ofstream f(path_base + ".csv");
      f << to_csv();
    }
  }

  static nlohmann::json environment_fingerprint() {
    nlohmann::json e;
#if defined(__clang__)
    e["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
    e["compiler"] = std::string("gcc ") + std::to_string(__GNUC__) + "." + std::to_string(__GNUC_MINOR__);
#else
    e["compiler"] = "unknown";
#endif
    e["double_digits"] = 53;
    return e;
  }
};

// ---------------------------------------------------------------------------
// Random measure families
// ---------------------------------------------------------------------------

inline DiscreteMeasureND sample_probability_measure(CounterRng& rng, int d, int n,
                                                    AtomLaw law = AtomLaw::Gaussian,
                                                    WeightLaw wlaw = WeightLaw::Uniform,
                                                    double pareto_index = 3.0) {
  std::vector<std::vector<double>> pts(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<double> x(static_cast<std::size_t>(d));
    switch (law) {
      case AtomLaw::Gaussian:
        x = rng.gaussian_vector(d);
        break;
      case AtomLaw::UniformCube:
        for (double& xi : x) xi = 2.0 * rng.next_double() - 1.0;
        break;
      case AtomLaw::Pareto: {
        // Radial Pareto length on a uniform direction.
        std::vector<double> dir = rng.unit_vector(d);
        double r = rng.next_pareto(pareto_index);
        for (int k = 0; k < d; ++k) x[static_cast<std::size_t>(k)] = r * dir[static_cast<std::size_t>(k)];
        break;
      }
    }
    pts[static_cast<std::size_t>(j)] = std::move(x);
  }
  std::vector<double> w(static_cast<std::size_t>(n), 1.0 / n);
  if (wlaw == WeightLaw::Dirichlet) {
    double s = 0.0;
    for (double& v : w) {
      v = -std::log(1.0 - rng.next_double());
      s += v;
    }
    for (double& v : w) v /= s;
  }
  return DiscreteMeasureND(d, std::move(pts), std::move(w), /*probability=*/true);
}

/// Random signed measure on the line with vanishing moments through p-1
/// (difference of a moment-matched probability pair).
inline DiscreteMeasure1D random_admissible_1d(std::uint64_t seed, int p, int n) {
  auto [mu, nu] = moment_matched_pair(seed, 1, p, n);
  std::vector<double> e1{1.0};
  return project(mu, e1) - project(nu, e1);
}

// ---------------------------------------------------------------------------
// Campaign runners
// ---------------------------------------------------------------------------

inline VerificationReport run_thm11(const ExperimentConfig& cfg) {
  VerificationReport rep;
  rep.kind = "thm11";
  rep.config = cfg.to_json();
  double beta = beta_thm_1_1(cfg.q, cfg.d);
  double max_c = 0.0, sum_c = 0.0;
  int nontrivial = 0;
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    CounterRng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
    DiscreteMeasureND mu = sample_probability_measure(rng, cfg.d, cfg.n_atoms, cfg.atom_law,
                                                     cfg.weight_law, cfg.q + cfg.pareto_index_margin);
    DiscreteMeasureND nu = sample_probability_measure(rng, cfg.d, cfg.n_atoms, cfg.atom_law,
                                                     cfg.weight_law, cfg.q + cfg.pareto_index_margin);
    double b = std::pow(std::max(abs_moment(mu, cfg.q), abs_moment(nu, cfg.q)), 1.0 / cfg.q);
    double lhs = w1_exact(mu, nu).cost;
    DirectionBudget budget = cfg.budget;
    budget.seed = derive_seed(cfg.seed, 0x517ce0ULL + static_cast<std::uint64_t>(trial));
    SlicedResult sliced = max_sliced(mu, nu, 1, budget);
    double S = sliced.value;

    nlohmann::json row;
    row["trial"] = trial;
    row["lhs_w1"] = lhs;
    row["max_sliced"] = S;
    row["b"] = b;
    row["beta"] = beta;
    bool contraction_ok = lhs >= S - 1e-9;
    row["contraction_ok"] = contraction_ok;
    if (S <= 1e-12) {
      // Cramer-Wold degenerate branch: all projections coincide, so the
      // measures must coincide.
      row["trivial"] = true;
      row["pass"] = contraction_ok && lhs <= 1e-9;
    } else {
      row["trivial"] = false;
      double rhs_factor = std::pow(b, 1.0 - beta) * std::pow(S, beta);
      double c = lhs / rhs_factor;
      row["rhs_factor"] = rhs_factor;
      row["implied_c"] = c;
      row["argmax_theta"] = sliced.argmax_theta;
      row["pass"] = contraction_ok && std::isfinite(c);
      max_c = std::max(max_c, c);
      sum_c += c;
      ++nontrivial;
    }
    if (!row["pass"].get<bool>()) {
      row["replay_mu"] = zolo::to_json(mu);
      row["replay_nu"] = zolo::to_json(nu);
    }
    rep.add_row(std::move(row));
  }
  rep.summary = {{"max_implied_c", max_c},
                 {"mean_implied_c", nontrivial ? sum_c / nontrivial : 0.0},
                 {"nontrivial_trials", nontrivial},
                 {"calibration_threshold", kCalibThm11MaxC}};
  if (nontrivial > 0 && max_c > 2.0 * kCalibThm11MaxC) rep.all_pass = false;
  return rep;
}

inline VerificationReport run_thm12_p1(const ExperimentConfig& cfg) {
  VerificationReport rep;
  rep.kind = "thm12_p1";
  rep.config = cfg.to_json();
  const int p = cfg.p;
  double beta = beta_thm_1_2(p, cfg.q, cfg.d);
  double max_c = 0.0;
  int nontrivial = 0;

  const bool exact_lhs = (p == 1) || (cfg.d == 1);
  rep.summary["mode"] = exact_lhs ? "full verification (exact LHS)"
                                  : "lower-bound consistency, not full verification";

  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    std::uint64_t tseed = derive_seed(cfg.seed, static_cast<std::uint64_t>(trial));
    nlohmann::json row;
    row["trial"] = trial;
    row["beta"] = beta;

    if (p == 1) {
      // Reduces to the thm11 shape with the (cd)^p convention: c = LHS /
      // (d b^{1-beta} S^beta).
      CounterRng rng(tseed);
      DiscreteMeasureND mu = sample_probability_measure(rng, cfg.d, cfg.n_atoms, cfg.atom_law,
                                                       cfg.weight_law, cfg.q + cfg.pareto_index_margin);
      DiscreteMeasureND nu = sample_probability_measure(rng, cfg.d, cfg.n_atoms, cfg.atom_law,
                                                       cfg.weight_law, cfg.q + cfg.pareto_index_margin);
      double b = std::pow(std::max(abs_moment(mu, cfg.q), abs_moment(nu, cfg.q)), 1.0 / cfg.q);
      double lhs = w1_exact(mu, nu).cost;
      DirectionBudget budget = cfg.budget;
      budget.seed = derive_seed(cfg.seed, 0x517ce0ULL + static_cast<std::uint64_t>(trial));
      double S = max_sliced(mu, nu, 1, budget).value;
      row["lhs_w1"] = lhs;
      row["max_sliced"] = S;
      row["b"] = b;
      if (S <= 1e-12) {
        row["trivial"] = true;
        row["pass"] = lhs <= 1e-9;
      } else {
        row["trivial"] = false;
        double c = lhs / (cfg.d * std::pow(b, 1.0 - beta) * std::pow(S, beta));
        row["implied_c"] = c;
        row["pass"] = std::isfinite(c);
        max_c = std::max(max_c, c);
        ++nontrivial;
      }
    } else if (cfg.d == 1) {
      // Exact LHS via the iterated-CDF formula; moment-matched pair so both
      // sides are finite.
      auto [mu, nu] = moment_matched_pair(tseed, 1, p, cfg.n_atoms);
      std::vector<double> e1{1.0};
      DiscreteMeasure1D lam = project(mu, e1) - project(nu, e1);
      double lhs = zeta_p_1d(lam, p);
      double b = std::pow(std::max(abs_moment(mu, cfg.q), abs_moment(nu, cfg.q)), 1.0 / cfg.q);
      double S = lhs;  // in d = 1 the only projections are +-identity
      row["lhs_zeta_p"] = lhs;
      row["max_sliced"] = S;
      row["b"] = b;
      if (S <= 1e-12) {
        row["trivial"] = true;
        row["pass"] = true;
      } else {
        row["trivial"] = false;
        double c = std::pow(lhs / (std::pow(b, 1.0 - beta) * std::pow(S, beta)), 1.0 / p) / cfg.d;
        row["implied_c"] = c;
        row["inequality_holds"] = lhs <= std::pow(std::max(c, 1.0) * cfg.d, p) *
                                             std::pow(b, 1.0 - beta) * std::pow(S, beta) + 1e-12;
        row["pass"] = std::isfinite(c);
        max_c = std::max(max_c, c);
        ++nontrivial;
      }
    } else {
      // p >= 2, d >= 2: exact zeta_p is not computable; assert the certified
      // chain S <= Corollary 2.4 upper bound and report RHS values.
      auto [mu, nu] = moment_matched_pair(tseed, cfg.d, p, cfg.n_atoms);
      DirectionBudget budget = cfg.budget;
      budget.seed = derive_seed(cfg.seed, 0x517ce0ULL + static_cast<std::uint64_t>(trial));
      double S = max_sliced(mu, nu, p, budget).value;
      DiscreteMeasureND lam = mu - nu;
      double upper = zeta_upper_cor_2_4(abs_moment(lam, p), p, cfg.d);
      double b = std::pow(std::max(abs_moment(mu, cfg.q), abs_moment(nu, cfg.q)), 1.0 / cfg.q);
      row["label"] = "lower-bound consistency, not full verification";
      row["max_sliced"] = S;
      row["cor_2_4_upper"] = upper;
      row["b"] = b;
      row["rhs_factor"] = std::pow(b, 1.0 - beta) * std::pow(S, beta);
      row["pass"] = S <= upper + 1e-9;
      ++nontrivial;
    }
    rep.add_row(std::move(row));
  }
  rep.summary["max_implied_c"] = max_c;
  rep.summary["nontrivial_trials"] = nontrivial;
  if (p == 1)
    rep.summary["calibration_threshold"] = kCalibThm12P1MaxC;
  else if (cfg.d == 1)
    rep.summary["calibration_threshold"] = kCalibThm12P2D1MaxC;
  return rep;
}

// ---------------------------------------------------------------------------
// Lemma suite
// ---------------------------------------------------------------------------

inline nlohmann::json kernel_certificate_row(int p, int d) {
  SmoothingKernel k = build_kernel(p, d);
  double mass = 0.0, abs_sum = 0.0, max_abs = 0.0;
  for (double a : k.weights) {
    mass += a;
    abs_sum += std::fabs(a);
    max_abs = std::max(max_abs, std::fabs(a));
  }
  double worst_moment = 0.0;
  for (int ord = 1; ord <= p - 1; ++ord) {
    double s = 0.0;
    for (std::size_t i = 0; i < k.weights.size(); ++i) s += k.weights[i] * std::pow(k.radii[i], ord);
    worst_moment = std::max(worst_moment, std::fabs(s));
  }
  double tv_bound = p * std::pow(2.0, 3 * p - 1);
  double coeff_bound = std::pow(2.0, 3 * p - 1);
  double density_bound = std::exp(-log_omega_d(d)) * std::pow(p, d + 1) * std::pow(8.0, p);
  bool pass = std::fabs(mass - 1.0) <= 1e-10 && worst_moment <= 1e-9 && abs_sum <= tv_bound &&
              max_abs <= coeff_bound && k.density_sup <= density_bound;
  return {{"check", "kernel_certificate"}, {"p", p},
          {"d", d},               {"mass_defect", std::fabs(mass - 1.0)},
          {"worst_radial_moment", worst_moment},
          {"abs_sum", abs_sum},   {"tv_bound", tv_bound},
          {"max_abs_weight", max_abs}, {"coeff_bound", coeff_bound},
          {"density_sup", k.density_sup}, {"density_bound", density_bound},
          {"pass", pass}};
}

struct SmoothingCheck {
  double zeta = 0.0;
  double prop_3_1_bound = 0.0;
  double cor_3_3_bound = 0.0;
  bool pass = false;
};

inline SmoothingCheck check_smoothing_bounds(const DiscreteMeasure1D& lambda, int p, double eps) {
  SmoothingKernel k = build_kernel(p, 1);
  DiscreteMeasure1D lam_eps = convolve_1d(lambda, k, eps);
  SmoothingCheck out;
  out.zeta = zeta_p_1d(lam_eps - lambda, p, /*moment_tol=*/1e-7);
  double tv = lambda.total_variation();
  double fact = 1.0;
  for (int i = 2; i <= p; ++i) fact *= i;
  out.prop_3_1_bound = std::pow(eps, p) / fact * tv * k.tv_norm;
  double fact1 = 1.0;
  for (int i = 2; i <= p - 1; ++i) fact1 *= i;
  out.cor_3_3_bound = std::pow(8.0 * eps, p) / (2.0 * fact1) * tv;
  out.pass = out.zeta <= out.prop_3_1_bound * (1.0 + 1e-9) && out.zeta <= out.cor_3_3_bound * (1.0 + 1e-9);
  return out;
}

/// Least-squares slope of log zeta(lambda_eps - lambda) against log eps.
inline double smoothing_decay_slope(const DiscreteMeasure1D& lambda, int p,
                                    const std::vector<double>& eps_grid) {
  SmoothingKernel k = build_kernel(p, 1);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int n = 0;
  for (double eps : eps_grid) {
    DiscreteMeasure1D lam_eps = convolve_1d(lambda, k, eps);
    double z = zeta_p_1d(lam_eps - lambda, p, 1e-7);
    if (z <= 0.0) continue;
    double x = std::log(eps), y = std::log(z);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return 0.0;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline VerificationReport run_lemma_suite(const ExperimentConfig& cfg) {
  VerificationReport rep;
  rep.kind = "lemma_suite";
  rep.config = cfg.to_json();

  // Kernel certificates over the whole (p,d) grid.
  for (int p = 1; p <= 6; ++p)
    for (int d = 1; d <= 5; ++d) rep.add_row(kernel_certificate_row(p, d));

  // Smoothing bounds at d = 1.
  for (int p : {1, 2, 3}) {
    for (double eps : {0.5, 0.1, 0.01}) {
      for (int rep_i = 0; rep_i < 5; ++rep_i) {
        DiscreteMeasure1D lam = random_admissible_1d(
            derive_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(p * 100 + rep_i)), p,
            std::max(p + 2, 6));
        SmoothingCheck chk = check_smoothing_bounds(lam, p, eps);
        rep.add_row({{"check", "smoothing_bound"}, {"p", p}, {"eps", eps}, {"rep", rep_i},
                     {"zeta", chk.zeta}, {"prop_3_1_bound", chk.prop_3_1_bound},
                     {"cor_3_3_bound", chk.cor_3_3_bound}, {"pass", chk.pass}});
      }
    }
    DiscreteMeasure1D lam = random_admissible_1d(derive_seed(cfg.seed, 2000 + static_cast<std::uint64_t>(p)),
                                                 p, std::max(p + 2, 6));
    std::vector<double> eps_grid;
    // Fit inside the asymptotic decade; the first decade below the support
    // scale still carries higher-order terms.
    for (int i = 0; i <= 8; ++i) eps_grid.push_back(0.001 * std::pow(10.0, static_cast<double>(i) / 8.0));
    double slope = smoothing_decay_slope(lam, p, eps_grid);
    rep.add_row({{"check", "smoothing_slope"}, {"p", p}, {"slope", slope}, {"pass", slope >= p - 0.1}});
  }

  // Bump certificates (FD range p <= 3, d <= 3).
  for (int p = 1; p <= 3; ++p) {
    BumpFunction b(p);
    double seam = seam_mismatch(b, p);
    rep.add_row({{"check", "bump_seam"}, {"p", p}, {"mismatch", seam}, {"pass", seam <= 1e-3}});
    for (int d = 1; d <= 3; ++d)
      for (const MultiIndex& gamma : multi_indices_up_to(d, p)) {
        CertReport cr = certify_derivative_bound(b, d, gamma, 40, derive_seed(cfg.seed, 3000));
        rep.add_row({{"check", "bump_derivative"}, {"p", p}, {"d", d}, {"gamma_len", gamma.length()},
                     {"max_estimate", cr.max_estimate}, {"bound", cr.bound}, {"pass", cr.pass}});
      }
  }

  // Fourier-side projection bound with exact M in d = 1.
  for (int p : {1, 2, 3}) {
    for (int rep_i = 0; rep_i < 5; ++rep_i) {
      auto [mu, nu] = moment_matched_pair(derive_seed(cfg.seed, 4000 + static_cast<std::uint64_t>(p * 10 + rep_i)),
                                          1, p, std::max(p + 2, 6));
      std::vector<double> e1{1.0};
      double M = zeta_p_1d(project(mu, e1) - project(nu, e1), p);
      auto grid = spectral_t_grid(1, 40, 1, cfg.seed);
      SpectralBoundReport sb = check_lemma_6_2(mu, nu, p, grid, M);
      rep.add_row({{"check", "spectral_bound"}, {"p", p}, {"rep", rep_i}, {"M", M},
                   {"max_ratio", sb.max_ratio}, {"pass", sb.max_ratio <= 1.0 + 1e-12}});
    }
  }

  // Universal moment upper bound domination in d = 1.
  for (int p : {1, 2, 3, 4}) {
    for (int rep_i = 0; rep_i < 10; ++rep_i) {
      DiscreteMeasure1D lam = random_admissible_1d(
          derive_seed(cfg.seed, 5000 + static_cast<std::uint64_t>(p * 100 + rep_i)), p,
          std::max(p + 2, 8));
      double z = zeta_p_1d(lam, p);
      double upper = zeta_upper_cor_2_4(lam.abs_moment(p), p, 1);
      rep.add_row({{"check", "moment_upper_bound"}, {"p", p}, {"rep", rep_i}, {"zeta", z},
                   {"upper", upper}, {"pass", z <= upper * (1.0 + 1e-9)}});
    }
  }

  int fails = 0;
  for (const auto& row : rep.rows)
    if (row.contains("pass") && !row["pass"].get<bool>()) ++fails;
  rep.summary = {{"rows", rep.rows.size()}, {"failures", fails}};
  return rep;
}

}  // namespace zolo
