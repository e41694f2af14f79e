#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace zolo {

/// Multi-index alpha = (a_1,...,a_d) with |alpha| = sum a_i.
struct MultiIndex {
  std::vector<int> exponents;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e) : exponents(std::move(e)) {
    for (int k : exponents)
      if (k < 0) throw std::invalid_argument("multi-index exponents must be nonnegative");
  }

  int dim() const { return static_cast<int>(exponents.size()); }
  int length() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

  double power(const std::vector<double>& x) const {
    double r = 1.0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      for (int k = 0; k < exponents[i]; ++k) r *= x[i];
    return r;
  }

  std::int64_t factorial() const {
    std::int64_t r = 1;
    for (int e : exponents)
      for (int k = 2; k <= e; ++k) r *= k;
    return r;
  }
};

// All multi-indices in dimension d with length <= max_len, ordered by length
// then lexicographically (deterministic enumeration order matters for the
// moment-matching solver).
inline std::vector<MultiIndex> multi_indices_up_to(int d, int max_len) {
  std::vector<MultiIndex> out;
  for (int len = 0; len <= max_len; ++len) {
    std::vector<MultiIndex> of_len;
    std::vector<int> c(static_cast<std::size_t>(d), 0);
    auto rec2 = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == d - 1) {
        c[static_cast<std::size_t>(pos)] = remaining;
        of_len.emplace_back(c);
        return;
      }
      for (int k = remaining; k >= 0; --k) {
        c[static_cast<std::size_t>(pos)] = k;
        self(self, pos + 1, remaining - k);
      }
    };
    rec2(rec2, 0, len);
    for (auto& m : of_len) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace zolo
