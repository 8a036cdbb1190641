#pragma once

// Shared dense linear algebra helpers used across the library.

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace dppfock {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

// det via LU with partial pivoting; magnitude accumulated in log form so a
// long product of pivots cannot under/overflow before the final exp.
inline Complex det_lu(const Matrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Complex(1.0, 0.0);
  Eigen::PartialPivLU<Matrix> lu(m);

  // permutation parity from the transposition count
  auto indices = lu.permutationP().indices();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int parity = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    Eigen::Index cycle_len = 0;
    Eigen::Index j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      j = indices(j);
      ++cycle_len;
    }
    if (cycle_len % 2 == 0) parity = -parity;
  }

  double log_abs = 0.0;
  Complex phase(static_cast<double>(parity), 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex u = lu.matrixLU()(i, i);
    const double a = std::abs(u);
    if (a == 0.0) return Complex(0.0, 0.0);
    log_abs += std::log(a);
    phase *= u / a;
  }
  return phase * std::exp(log_abs);
}

// Rows/columns of `m` restricted to the given index lists.
inline Matrix submatrix(const Matrix& m, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  Matrix out(static_cast<Eigen::Index>(rows.size()),
             static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          m(rows[i], cols[j]);
  return out;
}

inline std::vector<int> mask_to_indices(std::uint64_t mask) {
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (int j = 0; mask != 0; ++j, mask >>= 1)
    if (mask & 1u) idx.push_back(j);
  return idx;
}

// det of the principal submatrix selected by `mask` (empty mask -> 1).
inline Complex principal_minor(const Matrix& m, std::uint64_t mask) {
  const std::vector<int> idx = mask_to_indices(mask);
  return det_lu(submatrix(m, idx, idx));
}

// All size-m subsets of {0..n-1} as bitmasks, ascending numeric order.
inline std::vector<std::uint64_t> size_m_subsets(int n, int m) {
  std::vector<std::uint64_t> out;
  if (m < 0 || m > n) return out;
  if (m == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack walks masks of fixed popcount in increasing order.
  std::uint64_t v = (std::uint64_t{1} << m) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (v < limit) {
    out.push_back(v);
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t num = 1;
  for (int i = 0; i < k; ++i) {
    num = num * static_cast<std::uint64_t>(n - i) /
          static_cast<std::uint64_t>(i + 1);
  }
  return num;
}

// |x - y| relative to the larger magnitude, with an absolute floor of 1 so
// near-cancelled values are compared absolutely.
inline double scaled_residual(Complex x, Complex y) {
  const double scale = std::max(1.0, std::max(std::abs(x), std::abs(y)));
  return std::abs(x - y) / scale;
}

// FNV-1a over raw bytes; used to fingerprint kernels in sample batches.
inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t seed = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace dppfock
