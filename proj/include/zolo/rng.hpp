// Counter-based random generator. Every draw is a pure function of
// (seed, counter) via the splitmix64 finalizer, so streams are reproducible
// across platforms and safe to evaluate out of order.
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace zolo {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(detail::splitmix64(seed ^ detail::splitmix64(stream * 0xda942042e4dd58b5ULL))) {}

  std::uint64_t next_u64() {
    counter_ += 1;
    return detail::splitmix64(state_ + counter_ * 0x9e3779b97f4a7c15ULL);
  }

  // Uniform in [0,1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; draws come in computed pairs.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double(), u2 = next_double();
    while (u1 <= 1e-300) u1 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  std::vector<double> gaussian_vector(int d) {
    std::vector<double> v(static_cast<std::size_t>(d));
    for (double& x : v) x = next_gaussian();
    return v;
  }

  std::vector<double> unit_vector(int d) {
    for (;;) {
      std::vector<double> v = gaussian_vector(d);
      double n2 = 0.0;
      for (double x : v) n2 += x * x;
      if (n2 > 1e-24) {
        double inv = 1.0 / std::sqrt(n2);
        for (double& x : v) x *= inv;
        return v;
      }
    }
  }

  // Pareto with tail index a (survival t^-a), minimum 1.
  double next_pareto(double a) { return std::pow(1.0 - next_double(), -1.0 / a); }

private:
  std::uint64_t state_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Per-trial seed derivation for experiment harnesses.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return detail::splitmix64(master ^ detail::splitmix64(index + 0x632be59bd9b4e019ULL));
}

}  // namespace zolo
