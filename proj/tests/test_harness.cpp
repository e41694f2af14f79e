#include <doctest.h>

#include "zolo/harness.hpp"

TEST_CASE("report schema round trip and version gate") {
  zolo::VerificationReport rep;
  rep.kind = "thm11";
  rep.config = {{"seed", 1}};
  rep.add_row({{"trial", 0}, {"pass", true}, {"implied_c", 0.5}});
  rep.add_row({{"trial", 1}, {"pass", false}});
  rep.summary = {{"max_implied_c", 0.5}};
  CHECK_FALSE(rep.all_pass);

  auto j = rep.to_json();
  auto back = zolo::VerificationReport::from_json(j);
  CHECK(back.kind == "thm11");
  CHECK(back.rows.size() == 2);
  CHECK_FALSE(back.all_pass);

  j["schema_version"] = 999;
  CHECK_THROWS_AS(zolo::VerificationReport::from_json(j), std::runtime_error);
  auto j2 = rep.to_json();
  j2.erase("schema_version");
  CHECK_THROWS_AS(zolo::VerificationReport::from_json(j2), std::runtime_error);
}

TEST_CASE("csv flattening") {
  zolo::VerificationReport rep;
  rep.add_row({{"a", 1.5}, {"b", true}});
  rep.add_row({{"a", 2.5}, {"c", "x"}});
  std::string csv = rep.to_csv();
  CHECK(csv.rfind("a,b,c", 0) == 0);
  CHECK(csv.find("1.5,true,") != std::string::npos);
  CHECK(csv.find("2.5,,x") != std::string::npos);
}

TEST_CASE("measure sampling is seed deterministic") {
  zolo::CounterRng r1(5), r2(5);
  auto a = zolo::sample_probability_measure(r1, 3, 6);
  auto b = zolo::sample_probability_measure(r2, 3, 6);
  CHECK(a.points() == b.points());
  CHECK(a.weights() == b.weights());
  CHECK(a.is_probability());

  zolo::CounterRng r3(5);
  auto heavy = zolo::sample_probability_measure(r3, 2, 8, zolo::AtomLaw::Pareto,
                                                zolo::WeightLaw::Dirichlet, 4.0);
  CHECK(heavy.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& pt : heavy.points()) CHECK(zolo::norm2(pt) >= 1.0 - 1e-12);
}

TEST_CASE("campaigns are reproducible") {
  zolo::ExperimentConfig cfg;
  cfg.kind = "thm11";
  cfg.d = 2;
  cfg.n_trials = 4;
  cfg.seed = 12;
  cfg.budget.n_directions = 32;
  auto a = zolo::run_thm11(cfg);
  auto b = zolo::run_thm11(cfg);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.all_pass);
  for (const auto& row : a.rows) {
    if (row["trivial"].get<bool>()) continue;
    CHECK(row["lhs_w1"].get<double>() >= row["max_sliced"].get<double>() - 1e-9);
  }
}

TEST_CASE("higher-order runner modes are labeled") {
  zolo::ExperimentConfig cfg;
  cfg.p = 2;
  cfg.q = 3.0;
  cfg.d = 2;
  cfg.n_atoms = 8;
  cfg.n_trials = 3;
  cfg.seed = 4;
  cfg.budget.n_directions = 32;
  auto rep = zolo::run_thm12_p1(cfg);
  CHECK(rep.summary["mode"] == "lower-bound consistency, not full verification");
  for (const auto& row : rep.rows)
    CHECK(row["label"] == "lower-bound consistency, not full verification");

  cfg.d = 1;
  cfg.n_atoms = 6;
  auto exact = zolo::run_thm12_p1(cfg);
  CHECK(exact.summary["mode"] == "full verification (exact LHS)");
  CHECK(exact.all_pass);
}

TEST_CASE("failed rows carry replay data") {
  // Force a failure through a degenerate pairing is hard to stage; instead
  // verify the serializer path on the row level.
  zolo::VerificationReport rep;
  nlohmann::json row{{"pass", false}};
  row["replay_mu"] = zolo::to_json(zolo::DiscreteMeasureND::dirac({1.0}));
  rep.add_row(row);
  auto j = rep.to_json();
  CHECK(j["rows"][0].contains("replay_mu"));
}
