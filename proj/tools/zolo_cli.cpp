// Command-line front end: distance computations, kernel and bump audits,
// verification campaigns. Exit code 0 iff every asserted property passed.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zolo/harness.hpp"

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  f >> j;
  return j;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    f << j.dump(2) << "\n";
  }
}

zolo::DiscreteMeasureND load_nd(const std::string& path) { return zolo::measure_nd_from_json(load_json(path)); }
zolo::DiscreteMeasure1D load_1d(const std::string& path) { return zolo::measure_1d_from_json(load_json(path)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zolo: distances between discrete measures, smoothing kernels, verification campaigns"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  int p = 1, d = 2, n = 8, trials = 100, budget = 512;
  double q = 2.0;
  std::uint64_t seed = 1;
  std::string out;
  auto add_common = [&](CLI::App* c) {
    c->add_option("--input", inputs, "measure JSON file (repeatable)");
    c->add_option("--p", p, "smoothness order");
    c->add_option("--q", q, "moment order");
    c->add_option("--d", d, "ambient dimension");
    c->add_option("--n", n, "atoms per measure");
    c->add_option("--trials", trials, "number of trials");
    c->add_option("--seed", seed, "master seed");
    c->add_option("--budget", budget, "sliced-search direction budget");
    c->add_option("--out", out, "output path (default stdout)");
  };

  CLI::App* dist = app.add_subcommand("dist", "distance between two measures");
  CLI::App* dist_w1 = dist->add_subcommand("w1", "Kantorovich distance, exact min-cost flow");
  CLI::App* dist_zeta = dist->add_subcommand("zeta", "1D smoothness-p distance of a signed measure");
  add_common(dist_w1);
  add_common(dist_zeta);

  CLI::App* sliced = app.add_subcommand("sliced", "max-sliced distance between two measures");
  add_common(sliced);

  CLI::App* kernel = app.add_subcommand("kernel", "signed smoothing kernel");
  CLI::App* kernel_build = kernel->add_subcommand("build", "emit kernel weights and norms");
  CLI::App* kernel_audit = kernel->add_subcommand("audit", "certify kernel invariants over the (p,d) grid");
  add_common(kernel_build);
  add_common(kernel_audit);

  CLI::App* bump = app.add_subcommand("bump", "smooth radial cutoff");
  CLI::App* bump_build = bump->add_subcommand("build", "emit cutoff coefficients and profile");
  CLI::App* bump_audit = bump->add_subcommand("audit", "certify seam smoothness and derivative bounds");
  add_common(bump_build);
  add_common(bump_audit);

  CLI::App* verify = app.add_subcommand("verify", "verification campaigns");
  CLI::App* v11 = verify->add_subcommand("thm11", "first projection-inequality campaign");
  CLI::App* v12 = verify->add_subcommand("thm12", "higher-order projection-inequality campaign");
  CLI::App* vlem = verify->add_subcommand("lemmas", "quantitative lemma suite");
  add_common(v11);
  add_common(v12);
  add_common(vlem);

  CLI::App* oracle = app.add_subcommand("oracle", "independent certificates");
  CLI::App* oracle_w1 = oracle->add_subcommand("w1", "duality certificate for the flow solver");
  add_common(oracle_w1);

  CLI11_PARSE(app, argc, argv);

  // Thread count env var accepted for interface stability; execution is
  // single-threaded and deterministic regardless.
  const char* threads_env = std::getenv("ZOLO_THREADS");
  static_cast<void>(threads_env);

  try {
    auto need_two = [&]() {
      if (inputs.size() != 2) throw std::runtime_error("expected exactly two --input files");
    };

    if (dist_w1->parsed()) {
      need_two();
      zolo::TransportPlan plan = zolo::w1_exact(load_nd(inputs[0]), load_nd(inputs[1]));
      emit({{"w1", plan.cost}, {"n_flows", plan.flows.size()}}, out);
      return 0;
    }
    if (dist_zeta->parsed()) {
      double z;
      if (inputs.size() == 2) {
        z = zolo::zeta_p_1d(load_1d(inputs[0]) - load_1d(inputs[1]), p);
      } else if (inputs.size() == 1) {
        z = zolo::zeta_p_1d(load_1d(inputs[0]), p);
      } else {
        throw std::runtime_error("expected one signed or two probability --input files");
      }
      emit({{"zeta_p", z}, {"p", p}}, out);
      return 0;
    }
    if (sliced->parsed()) {
      need_two();
      zolo::DirectionBudget db;
      db.n_directions = budget;
      db.seed = seed;
      zolo::SlicedResult r = zolo::max_sliced(load_nd(inputs[0]), load_nd(inputs[1]), p, db);
      emit({{"value", r.value}, {"argmax_theta", r.argmax_theta}, {"p", p},
            {"n_directions", r.n_directions}, {"seed", r.seed}},
           out);
      return 0;
    }
    if (kernel_build->parsed()) {
      emit(zolo::to_json(zolo::build_kernel(p, d)), out);
      return 0;
    }
    if (kernel_audit->parsed()) {
      nlohmann::json rows = nlohmann::json::array();
      bool ok = true;
      for (int pp = 1; pp <= 6; ++pp)
        for (int dd = 1; dd <= 5; ++dd) {
          nlohmann::json row = zolo::kernel_certificate_row(pp, dd);
          ok = ok && row["pass"].get<bool>();
          rows.push_back(std::move(row));
        }
      emit({{"rows", rows}, {"all_pass", ok}}, out);
      return ok ? 0 : 1;
    }
    if (bump_build->parsed()) {
      zolo::BumpFunction b(p);
      std::vector<double> coeffs;
      for (const zolo::Rational& r : b.v_coeffs_rational()) coeffs.push_back(r.to_double());
      emit({{"p", p}, {"v_coeffs", coeffs}, {"normalizer", b.normalizer()},
            {"profile_csv", zolo::bump_profile_csv(b)}},
           out);
      return 0;
    }
    if (bump_audit->parsed()) {
      zolo::BumpFunction b(p);
      nlohmann::json rows = nlohmann::json::array();
      double seam = zolo::seam_mismatch(b, p);
      bool ok = seam <= 1e-3;
      rows.push_back({{"check", "seam"}, {"mismatch", seam}, {"pass", ok}});
      int dmax = std::min(d, 3);
      for (int dd = 1; dd <= dmax; ++dd)
        for (const zolo::MultiIndex& g : zolo::multi_indices_up_to(dd, p)) {
          zolo::CertReport cr = zolo::certify_derivative_bound(b, dd, g, 40, seed);
          ok = ok && cr.pass;
          rows.push_back({{"check", "derivative"}, {"d", dd}, {"gamma", g.exponents},
                          {"max_estimate", cr.max_estimate}, {"bound", cr.bound}, {"pass", cr.pass}});
        }
      emit({{"p", p}, {"rows", rows}, {"all_pass", ok}}, out);
      return ok ? 0 : 1;
    }
    if (v11->parsed() || v12->parsed() || vlem->parsed()) {
      zolo::ExperimentConfig cfg;
      cfg.p = p;
      cfg.q = q;
      cfg.d = d;
      cfg.n_atoms = n;
      cfg.n_trials = trials;
      cfg.seed = seed;
      cfg.budget.n_directions = budget;
      cfg.out_path = out;
      zolo::VerificationReport rep;
      if (v11->parsed()) {
        cfg.kind = "thm11";
        rep = zolo::run_thm11(cfg);
      } else if (v12->parsed()) {
        cfg.kind = "thm12_p1";
        rep = zolo::run_thm12_p1(cfg);
      } else {
        cfg.kind = "lemma_suite";
        rep = zolo::run_lemma_suite(cfg);
      }
      if (out.empty()) {
        std::cout << rep.to_json().dump(2) << "\n";
      } else {
        rep.write(out);
      }
      std::cerr << rep.kind << ": " << (rep.all_pass ? "PASS" : "FAIL") << "\n";
      return rep.all_pass ? 0 : 1;
    }
    if (oracle_w1->parsed()) {
      need_two();
      zolo::DiscreteMeasureND mu = load_nd(inputs[0]), nu = load_nd(inputs[1]);
      zolo::TransportPlan plan = zolo::w1_exact(mu, nu);
      // Certificate: dual feasibility u_i + v_j <= c_ij and primal = dual.
      double worst = 0.0;
      for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = 0; j < nu.size(); ++j) {
          double c = 0.0;
          for (int k = 0; k < mu.dim(); ++k) {
            double dx = mu.points()[i][static_cast<std::size_t>(k)] -
                        nu.points()[j][static_cast<std::size_t>(k)];
            c += dx * dx;
          }
          worst = std::max(worst, plan.dual_u[i] + plan.dual_v[j] - std::sqrt(c));
        }
      double dual = plan.dual_value(mu.weights(), nu.weights());
      bool ok = worst <= 1e-7 && std::fabs(dual - plan.cost) <= 1e-7 * std::max(1.0, plan.cost);
      emit({{"w1", plan.cost}, {"dual_value", dual}, {"max_dual_violation", worst}, {"pass", ok}}, out);
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "no subcommand executed\n";
  return 2;
}
