// Small dense linear algebra helpers. Everything here operates on tiny
// systems (moment constraints, Gram matrices), so plain Gaussian elimination
// with partial pivoting is adequate.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace zolo::detail {

// Solves A x = b in place, A given row-major n x n. Throws on (numerical)
// singularity.
inline std::vector<double> solve_dense(std::vector<double> A, std::vector<double> b) {
  const std::size_t n = b.size();
  if (A.size() != n * n) throw std::invalid_argument("solve_dense: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(A[r * n + col]) > std::fabs(A[piv * n + col])) piv = r;
    if (std::fabs(A[piv * n + col]) < 1e-300) throw std::runtime_error("solve_dense: singular matrix");
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(A[piv * n + k], A[col * n + k]);
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = A[r * n + col] / A[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t k = col; k < n; ++k) A[r * n + k] -= f * A[col * n + k];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= A[i * n + k] * x[k];
    x[i] = s / A[i * n + i];
  }
  return x;
}

// Björck–Pereyra progressive elimination for the "moment" Vandermonde system
//   sum_i a_i * nodes_i^k = f_k,  k = 0..n-1.
// Considerably more accurate than LU for the nearly equispaced nodes used by
// the smoothing kernel.
inline std::vector<double> solve_vandermonde_moment(const std::vector<double>& nodes,
                                                   std::vector<double> f) {
  const int n = static_cast<int>(nodes.size());
  if (static_cast<int>(f.size()) != n) throw std::invalid_argument("vandermonde: shape mismatch");
  for (int k = 0; k < n - 1; ++k)
    for (int j = n - 1; j > k; --j) f[j] -= nodes[k] * f[j - 1];
  for (int k = n - 2; k >= 0; --k) {
    for (int j = k + 1; j < n; ++j) f[j] /= (nodes[j] - nodes[j - k - 1]);
    for (int j = k; j < n - 1; ++j) f[j] -= f[j + 1];
  }
  return f;
}

}  // namespace zolo::detail
