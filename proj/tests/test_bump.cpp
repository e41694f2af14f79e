#include <doctest.h>

#include <cmath>

#include "zolo/bump.hpp"

using zolo::BumpFunction;

TEST_CASE("normalizers and low-order coefficients") {
  BumpFunction b1(1);
  CHECK(b1.normalizer() == doctest::Approx(1.0 / 6.0));
  // v(t) = 3t^2 - 2t^3 at p = 1.
  CHECK(b1.v()(0.25) == doctest::Approx(3 * 0.0625 - 2 * 0.015625).epsilon(1e-15));
  const auto& c = b1.v_coeffs_rational();
  CHECK(c[2] == zolo::Rational(3));
  CHECK(c[3] == zolo::Rational(-2));

  CHECK(BumpFunction(2).normalizer() == doctest::Approx(1.0 / 30.0));
  CHECK_THROWS_AS(BumpFunction(0), std::invalid_argument);
  CHECK_THROWS_AS(BumpFunction(7), std::invalid_argument);
}

TEST_CASE("transition midpoint symmetry") {
  for (int p = 1; p <= 6; ++p) {
    BumpFunction b(p);
    CHECK(b.eval_v(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(b.eval_v(0.0) == doctest::Approx(0.0));
    CHECK(b.eval_v(1.0) == doctest::Approx(1.0));
  }
}

TEST_CASE("cutoff values") {
  BumpFunction b(1);
  CHECK(b.eval_psi({0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(b.eval_psi({1.0, 0.0}) == doctest::Approx(0.0));
  CHECK(b.eval_psi({0.3, 0.3}) == doctest::Approx(1.0));  // inside the core
  // |x|^2 = 5/8 maps to the transition midpoint.
  CHECK(b.eval_psi_r2(5.0 / 8.0) == doctest::Approx(0.5).epsilon(1e-12));
  for (int p = 1; p <= 6; ++p) {
    BumpFunction bp(p);
    for (double r = 0.0; r <= 1.3; r += 0.01) {
      double v = bp.eval_psi_radial(r);
      CHECK(v >= -1e-15);
      CHECK(v <= 1.0 + 1e-15);
    }
  }
}

TEST_CASE("radial monotonicity") {
  for (int p = 1; p <= 6; ++p) {
    BumpFunction b(p);
    double prev = 2.0;
    for (int i = 0; i <= 1200; ++i) {
      double v = b.eval_psi_radial(1.2 * i / 1200.0);
      CHECK(v <= prev + 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("seam smoothness") {
  for (int p = 1; p <= 3; ++p) {
    double mism = zolo::seam_mismatch(BumpFunction(p), p);
    CHECK_MESSAGE(mism <= 1e-3, "p=", p, " mismatch=", mism);
  }
}

TEST_CASE("first-order derivative against the closed form") {
  // p=1, d=1: psi(x) = 1 - v((4x^2-1)/3) on the shell, so
  // psi'(x) = -v'(y) * 8x/3 with v'(t) = 6t(1-t).
  BumpFunction b(1);
  zolo::MultiIndex g({1});
  for (double x : {0.6, 0.75, 0.9}) {
    double y = (4.0 * x * x - 1.0) / 3.0;
    double exact = -(6.0 * y * (1.0 - y)) * (8.0 * x / 3.0);
    double fd = zolo::detail::fd_mixed_derivative(
        [&](const std::vector<double>& pt) { return b.eval_psi(pt); }, {x}, g.exponents, 1e-2);
    CHECK(fd == doctest::Approx(exact).epsilon(1e-6));
  }
}

TEST_CASE("derivative bound certification") {
  for (int p = 1; p <= 3; ++p) {
    BumpFunction b(p);
    for (int d = 1; d <= 2; ++d)
      for (const auto& g : zolo::multi_indices_up_to(d, p)) {
        auto rep = zolo::certify_derivative_bound(b, d, g, 20, 777);
        CHECK_MESSAGE(rep.pass, "p=", p, " d=", d, " |g|=", g.length(), " est=", rep.max_estimate,
                      " bound=", rep.bound);
      }
  }
  BumpFunction b2(2);
  CHECK_THROWS_AS(zolo::certify_derivative_bound(b2, 2, zolo::MultiIndex({2, 1}), 5, 1),
                  std::invalid_argument);  // order exceeds smoothness
  CHECK_THROWS_AS(zolo::certify_derivative_bound(b2, 4, zolo::MultiIndex({1, 0, 0, 0}), 5, 1),
                  std::invalid_argument);  // dimension beyond FD range
}

TEST_CASE("profile export shape") {
  std::string csv = zolo::bump_profile_csv(BumpFunction(2), 50);
  CHECK(csv.rfind("radius,psi,dpsi_estimate", 0) == 0);
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 52);
}
