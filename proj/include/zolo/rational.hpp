// Minimal exact rational arithmetic over 64-bit integers. Used where
// floating-point cancellation would hurt (bump-function coefficients); all
// magnitudes involved stay far below the int64 range for the supported orders.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace zolo {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(Rational a, Rational b) {
    std::int64_t g = std::gcd(a.den, b.den);
    std::int64_t l = a.den / g * b.den;
    return Rational(a.num * (l / a.den) + b.num * (l / b.den), l);
  }
  friend Rational operator-(Rational a, Rational b) { return a + Rational(-b.num, b.den); }
  friend Rational operator*(Rational a, Rational b) {
    std::int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    std::int64_t g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
  }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw std::domain_error("rational: division by zero");
    return a * Rational(b.den, b.num);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline Rational rational_factorial(int n) {
  Rational r(1);
  for (int k = 2; k <= n; ++k) r = r * Rational(k);
  return r;
}

inline std::int64_t binomial_i64(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace zolo
