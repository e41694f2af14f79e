#include <doctest.h>

#include <cmath>

#include "zolo/harness.hpp"
#include "zolo/kernel.hpp"

using zolo::build_kernel;
using zolo::MultiIndex;
using zolo::SmoothingKernel;

TEST_CASE("closed-form weights at small orders") {
  SmoothingKernel k1 = build_kernel(1, 3);
  REQUIRE(k1.weights.size() == 1);
  CHECK(k1.weights[0] == doctest::Approx(1.0));

  SmoothingKernel k2 = build_kernel(2, 1);
  CHECK(k2.weights[0] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(k2.weights[1] == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(k2.radii[0] == doctest::Approx(0.5));
  CHECK(k2.radii[1] == doctest::Approx(1.0));
  double abs_sum = std::fabs(k2.weights[0]) + std::fabs(k2.weights[1]);
  CHECK(abs_sum == doctest::Approx(3.0));
  CHECK(abs_sum <= 2.0 * std::pow(2.0, 5));  // p 2^{3p-1} = 64
}

TEST_CASE("invariants across the full parameter grid") {
  for (int p = 1; p <= 6; ++p)
    for (int d = 1; d <= 5; ++d) {
      auto row = zolo::kernel_certificate_row(p, d);
      CHECK_MESSAGE(row["pass"].get<bool>(), "p=", p, " d=", d, " row=", row.dump());
    }
  CHECK_THROWS_AS(build_kernel(7, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_kernel(0, 1), std::invalid_argument);
}

TEST_CASE("radial moments") {
  SmoothingKernel k2 = build_kernel(2, 3);
  CHECK(zolo::kernel_radial_moment(k2, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(zolo::kernel_radial_moment(k2, 1) == doctest::Approx(0.0).epsilon(1e-12));
  SmoothingKernel k4 = build_kernel(4, 2);
  for (int ord = 1; ord <= 3; ++ord)
    CHECK(std::fabs(zolo::kernel_radial_moment(k4, ord)) < 1e-9);
}

TEST_CASE("mixed moments") {
  SmoothingKernel k = build_kernel(3, 2);
  CHECK(zolo::kernel_mixed_moment(k, MultiIndex({1, 0})) == doctest::Approx(0.0));
  CHECK(zolo::kernel_mixed_moment(k, MultiIndex({1, 2})) == doctest::Approx(0.0));
  CHECK(zolo::kernel_mixed_moment(k, MultiIndex({3, 1})) == doctest::Approx(0.0));  // odd exponent

  SmoothingKernel ku = build_kernel(1, 1);  // uniform on [-1,1]
  CHECK(zolo::kernel_mixed_moment(ku, MultiIndex({2})) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(zolo::kernel_mixed_moment(ku, MultiIndex({0})) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("density values are shellwise constant") {
  SmoothingKernel k = build_kernel(2, 1);
  // Shell values: on (0, 1/2): (2/0.5 - 1)/omega_1 = 3/2; on (1/2, 1): -1/2.
  CHECK(k.density_at(0.25) == doctest::Approx(1.5));
  CHECK(k.density_at(0.75) == doctest::Approx(-0.5));
  CHECK(k.density_at(1.5) == doctest::Approx(0.0));
  CHECK(k.density_sup == doctest::Approx(1.5));
  CHECK(k.tv_norm == doctest::Approx(2.0));
}

TEST_CASE("convolution of a point mass with the first-order kernel") {
  zolo::DiscreteMeasure1D delta({{0.0, 1.0}});
  auto out = zolo::convolve_1d(delta, build_kernel(1, 1), 1.0);
  CHECK(out.atoms().empty());
  CHECK(out.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out.density()(0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(out.density()(0.99) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(out.density()(1.01) == doctest::Approx(0.0));
  CHECK(out.density().support_lo() == doctest::Approx(-1.0));
}

TEST_CASE("convolution preserves mass and low moments") {
  for (int p : {2, 3, 4}) {
    zolo::DiscreteMeasure1D lam = zolo::random_admissible_1d(zolo::derive_seed(60, p), p, p + 3);
    SmoothingKernel k = build_kernel(p, 1);
    for (double eps : {0.5, 0.1}) {
      auto le = zolo::convolve_1d(lam, k, eps);
      CHECK(le.total_mass() == doctest::Approx(lam.total_mass()).epsilon(1e-12));
      for (int ord = 0; ord <= p - 1; ++ord)
        CHECK(std::fabs(le.moment(ord) - lam.moment(ord)) < 1e-9);
    }
  }
}

TEST_CASE("convolution of density pieces is exact") {
  // Uniform[0,1] convolved with uniform[-1,1]/2 has the trapezoid cdf shape;
  // value at the center: int of 1/2 over the overlap of length 1 -> 1/2.
  zolo::PiecewisePoly dens;
  dens.add_piece(0.0, 1.0, zolo::Poly::constant(1.0));
  zolo::DiscreteMeasure1D u({}, dens);
  auto out = zolo::convolve_1d(u, build_kernel(1, 1), 1.0);
  CHECK(out.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out.density()(0.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(out.density()(-0.5) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(out.density()(1.5) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(out.density().support_lo() == doctest::Approx(-1.0));
  CHECK(out.density().support_hi() == doctest::Approx(2.0));
}

TEST_CASE("kernel json export") {
  auto j = zolo::to_json(build_kernel(2, 1));
  CHECK(j["p"] == 2);
  CHECK(j["a"][0].get<double>() == doctest::Approx(2.0));
  CHECK(j["tv"].get<double>() == doctest::Approx(2.0));
}
