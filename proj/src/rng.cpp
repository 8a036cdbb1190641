#include "dppfock/rng.hpp"

namespace dppfock {

Matrix random_ginibre(int n, std::mt19937_64& rng) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = complex_gaussian(rng);
  return m;
}

Matrix random_unitary(int n, std::mt19937_64& rng) {
  if (n == 0) return Matrix(0, 0);
  Matrix g = random_ginibre(n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  // fix phases so the distribution is Haar, not just unitary
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix random_kernel_matrix(int n, std::mt19937_64& rng) {
  Matrix u = random_unitary(n, rng);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  RealVector lambda(n);
  for (int i = 0; i < n; ++i) lambda(i) = unif(rng);
  Matrix k = u * lambda.asDiagonal() * u.adjoint();
  return (k + k.adjoint()) / 2.0;
}

Matrix random_projector_matrix(int n, int rank, std::mt19937_64& rng) {
  if (rank == 0) return Matrix::Zero(n, n);
  Matrix u = random_unitary(n, rng);
  Matrix q = u.leftCols(rank);
  Matrix k = q * q.adjoint();
  return (k + k.adjoint()) / 2.0;
}

std::vector<Complex> random_symbol_values(int n, double max_abs,
                                          std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Complex> a(static_cast<std::size_t>(n));
  for (auto& v : a) {
    const double r = max_abs * std::sqrt(unif(rng));
    const double th = 2.0 * kPi * unif(rng);
    v = std::polar(r, th);
  }
  return a;
}

Matrix random_operator_matrix(int n, std::mt19937_64& rng) {
  Matrix m = random_ginibre(n, rng);
  if (n > 0) m /= std::sqrt(static_cast<double>(n));
  return m;
}

}  // namespace dppfock
