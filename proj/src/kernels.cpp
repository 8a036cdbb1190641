#include "dppfock/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace dppfock {

namespace {

void check_finite(const Matrix& m) {
  if (!m.allFinite()) throw Error("matrix has non-finite entries");
}

}  // namespace

DiscreteKernel make_discrete_kernel(const Matrix& matrix, double spectrum_tol) {
  if (matrix.rows() != matrix.cols())
    throw Error("kernel matrix must be square");
  if (matrix.rows() == 0) throw Error("kernel matrix must be non-empty");
  check_finite(matrix);

  const double scale = matrix.cwiseAbs().maxCoeff();
  const double herm = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol * (1.0 + scale)) {
    std::ostringstream os;
    os << "matrix is not Hermitian: |K - K*|_max = " << herm;
    throw NotHermitian(os.str());
  }

  Matrix sym = (matrix + matrix.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success) throw Error("eigensolver failed");

  RealVector lambda = es.eigenvalues();
  for (int i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < -spectrum_tol || lambda(i) > 1.0 + spectrum_tol) {
      std::ostringstream os;
      os << "eigenvalue " << lambda(i)
         << " outside [0,1]; the matrix cannot define a point process";
      throw SpectrumOutOfRange(os.str());
    }
    lambda(i) = std::clamp(lambda(i), 0.0, 1.0);
  }

  Matrix rebuilt =
      es.eigenvectors() * lambda.asDiagonal() * es.eigenvectors().adjoint();
  rebuilt = (rebuilt + rebuilt.adjoint()) / 2.0;
  return DiscreteKernel{std::move(rebuilt), {}};
}

SpectralData spectral_decompose(const DiscreteKernel& kernel) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(kernel.entries);
  if (es.info() != Eigen::Success) throw Error("eigensolver failed");

  const int n = kernel.dim();
  const RealVector raw = es.eigenvalues();

  // descending; a stable sort keeps the eigensolver's order within ties
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&raw](int a, int b) { return raw(a) > raw(b); });

  SpectralData sd;
  sd.eigenvalues.resize(n);
  sd.eigenvectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    sd.eigenvalues(k) = std::clamp(raw(order[static_cast<std::size_t>(k)]),
                                   0.0, 1.0);
    sd.eigenvectors.col(k) =
        es.eigenvectors().col(order[static_cast<std::size_t>(k)]);
  }
  return sd;
}

double sine_kernel(double x, double y) {
  const double t = x - y;
  if (t == 0.0) return 1.0 / kPi;
  return std::sin(t) / (kPi * t);
}

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw BadInterval("gauss_legendre: n must be >= 1");
  if (!(lo < hi)) throw BadInterval("gauss_legendre: requires lo < hi");

  // Newton iteration on Legendre polynomials for the nodes on [-1,1].
  QuadratureRule rule;
  rule.lo = lo;
  rule.hi = hi;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));

  const double xm = 0.5 * (hi + lo);
  const double xl = 0.5 * (hi - lo);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double z1, pp;
    do {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::fabs(z - z1) > 1e-15);
    rule.nodes[static_cast<std::size_t>(i)] = xm - xl * z;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = xm + xl * z;
    const double w = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

DiscreteKernel discretize(const KernelFunction& f, const QuadratureRule& q) {
  const int n = q.size();
  Matrix m(n, n);
  std::vector<double> sw(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    sw[static_cast<std::size_t>(i)] = std::sqrt(q.weights[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = sw[static_cast<std::size_t>(i)] *
                f(q.nodes[static_cast<std::size_t>(i)],
                  q.nodes[static_cast<std::size_t>(j)]) *
                sw[static_cast<std::size_t>(j)];

  DiscreteKernel kernel = make_discrete_kernel(m, kDiscretizationSpectrumTol);
  kernel.labels = q.nodes;
  return kernel;
}

}  // namespace dppfock
