#include <doctest.h>

#include <cmath>
#include <vector>

#include "zolo/linalg.hpp"
#include "zolo/multi_index.hpp"
#include "zolo/rational.hpp"
#include "zolo/rng.hpp"

TEST_CASE("dense solve recovers a known solution") {
  // 2x2: x + y = 3, x - y = 1 -> (2, 1).
  std::vector<double> A{1.0, 1.0, 1.0, -1.0};
  auto x = zolo::detail::solve_dense(A, {3.0, 1.0});
  CHECK(x[0] == doctest::Approx(2.0));
  CHECK(x[1] == doctest::Approx(1.0));
  std::vector<double> S{1.0, 2.0, 2.0, 4.0};  // singular
  CHECK_THROWS_AS(zolo::detail::solve_dense(S, {1.0, 1.0}), std::runtime_error);
}

TEST_CASE("moment-type vandermonde solve at small orders") {
  // p=2, nodes 1/2, 1: a1 + a2 = 1, a1/2 + a2 = 0 -> (2, -1).
  auto a = zolo::detail::solve_vandermonde_moment({0.5, 1.0}, {1.0, 0.0});
  CHECK(a[0] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(a[1] == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("moment residuals stay tiny through order 6") {
  for (int p = 2; p <= 6; ++p) {
    std::vector<double> nodes(static_cast<std::size_t>(p)), e1(static_cast<std::size_t>(p), 0.0);
    for (int i = 1; i <= p; ++i) nodes[static_cast<std::size_t>(i - 1)] = static_cast<double>(i) / p;
    e1[0] = 1.0;
    auto a = zolo::detail::solve_vandermonde_moment(nodes, e1);
    for (int k = 0; k < p; ++k) {
      double s = 0.0;
      for (int i = 0; i < p; ++i)
        s += a[static_cast<std::size_t>(i)] * std::pow(nodes[static_cast<std::size_t>(i)], k);
      CHECK(std::fabs(s - (k == 0 ? 1.0 : 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("counter rng determinism and basic stats") {
  zolo::CounterRng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  bool differs = false;
  zolo::CounterRng a2(42);
  for (int i = 0; i < 100; ++i) differs = differs || (a2.next_u64() != c.next_u64());
  CHECK(differs);

  zolo::CounterRng r(7);
  double mean = 0.0;
  for (int i = 0; i < 10000; ++i) {
    double u = r.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    mean += u;
  }
  CHECK(mean / 10000 == doctest::Approx(0.5).epsilon(0.05));

  auto v = r.unit_vector(5);
  double n2 = 0.0;
  for (double x : v) n2 += x * x;
  CHECK(n2 == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(zolo::derive_seed(1, 0) != zolo::derive_seed(1, 1));
  CHECK(zolo::derive_seed(1, 0) == zolo::derive_seed(1, 0));
}

TEST_CASE("rational arithmetic") {
  using zolo::Rational;
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK((Rational(1, 2) / Rational(3, 4)) == Rational(2, 3));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(zolo::rational_factorial(5) == Rational(120));
  CHECK(zolo::binomial_i64(6, 3) == 20);
  // normalizer p!^2/(2p+1)!: 1/6 at p=1, 1/30 at p=2
  auto A = [](int p) {
    return zolo::rational_factorial(p) * zolo::rational_factorial(p) /
           zolo::rational_factorial(2 * p + 1);
  };
  CHECK(A(1) == Rational(1, 6));
  CHECK(A(2) == Rational(1, 30));
}

TEST_CASE("multi-index enumeration") {
  auto idx = zolo::multi_indices_up_to(2, 2);
  // lengths 0,1,2: 1 + 2 + 3 = 6 indices
  CHECK(idx.size() == 6);
  CHECK(idx[0].length() == 0);
  CHECK(idx.back().length() == 2);
  zolo::MultiIndex m(std::vector<int>{2, 1});
  CHECK(m.length() == 3);
  CHECK(m.power({3.0, 2.0}) == doctest::Approx(18.0));
  CHECK(m.factorial() == 2);
  CHECK_THROWS_AS(zolo::MultiIndex(std::vector<int>{-1}), std::invalid_argument);
}
