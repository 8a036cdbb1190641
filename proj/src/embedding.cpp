#include "dppfock/embedding.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace dppfock {

namespace {

Matrix multiplier_diag(const Symbol& a) {
  const int n = a.size();
  Matrix m = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) m(j, j) = a.multiplier(j);
  return m;
}

// diag(I, M) on the doubled space
Matrix doubled_diag(const Matrix& m) {
  const auto n = m.rows();
  Matrix out = Matrix::Identity(2 * n, 2 * n);
  out.block(n, n, n, n) = m;
  return out;
}

}  // namespace

DoubledProjector doubling_projector(const DiscreteKernel& kernel) {
  const int n = kernel.dim();
  const SpectralData sd = spectral_decompose(kernel);

  RealVector defect(n);
  for (int k = 0; k < n; ++k) {
    const double lam = sd.eigenvalues(k);
    const double d = lam - lam * lam;
    if (d < -1e-12) {
      std::ostringstream os;
      os << "lambda - lambda^2 = " << d << " below -1e-12";
      throw SpectrumOutOfRange(os.str());
    }
    defect(k) = std::sqrt(std::max(d, 0.0));
  }
  Matrix root =
      sd.eigenvectors * defect.asDiagonal() * sd.eigenvectors.adjoint();
  root = (root + root.adjoint()) / 2.0;

  Matrix l(2 * n, 2 * n);
  l.topLeftCorner(n, n) = Matrix::Identity(n, n) - kernel.entries;
  l.topRightCorner(n, n) = root;
  l.bottomLeftCorner(n, n) = root;
  l.bottomRightCorner(n, n) = kernel.entries;

  const double idem = (l * l - l).cwiseAbs().maxCoeff();
  if (idem > 1e-9) {
    std::ostringstream os;
    os << "doubled matrix is not idempotent: |L^2 - L|_max = " << idem;
    throw Error(os.str());
  }
  return DoubledProjector{std::move(l)};
}

BlockOperator doubled_symbol(const Symbol& a) {
  const int n = a.size();
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), n);
  return BlockOperator(doubled_diag(multiplier_diag(a)),
                       SplitSpace::make(2 * n, std::move(w)));
}

double block_conjugation_check(const DiscreteKernel& kernel, const Symbol& a) {
  const int n = kernel.dim();
  if (a.size() != n) throw Error("symbol length does not match the kernel");

  const Matrix l = doubling_projector(kernel).matrix;
  const Matrix am1 = multiplier_diag(a) - Matrix::Identity(n, n);
  Matrix gm1 = Matrix::Zero(2 * n, 2 * n);
  gm1.block(n, n, n, n) = am1;

  const Matrix lhs = gm1.adjoint() * l * gm1;
  Matrix rhs = Matrix::Zero(2 * n, 2 * n);
  rhs.block(n, n, n, n) = am1.adjoint() * kernel.entries * am1;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

double projector_embedding_check(const DiscreteKernel& kernel, const Symbol& a,
                                 const Symbol& b) {
  const int n = kernel.dim();
  if (a.size() != n || b.size() != n)
    throw Error("symbol length does not match the kernel");

  const double proj_defect =
      (kernel.entries * kernel.entries - kernel.entries).cwiseAbs().maxCoeff();
  if (proj_defect > 1e-9) {
    std::ostringstream os;
    os << "kernel is not a projector: |K^2 - K|_max = " << proj_defect;
    throw NotAProjector(os.str());
  }

  // rotate to the eigenbasis; eigenvalue-1 directions come first and span W
  const SpectralData sd = spectral_decompose(kernel);
  std::vector<int> w;
  for (int k = 0; k < n; ++k)
    if (sd.eigenvalues(k) > 0.5) w.push_back(k);
  const SplitSpace split = SplitSpace::make(n, w);
  const Matrix& u = sd.eigenvectors;

  const BlockOperator ga(u.adjoint() * multiplier_diag(a) * u, split);
  const BlockOperator gb(u.adjoint() * multiplier_diag(b) * u, split);

  const FiniteDPP dpp{DiscreteKernel{kernel.entries, {}}};
  const Complex gram = gram_det(dpp, a, b);
  double residual = scaled_residual(coherent_inner_det(ga, gb), gram);

  if (n <= 8) {
    const Complex explicit_inner =
        fock_inner(coherent_state(ga), coherent_state(gb));
    residual = std::max(residual, scaled_residual(explicit_inner, gram));
  }
  return residual;
}

double general_embedding_check(const DiscreteKernel& kernel, const Symbol& a,
                               const Symbol& b) {
  const int n = kernel.dim();
  if (a.size() != n || b.size() != n)
    throw Error("symbol length does not match the kernel");

  const Matrix l = doubling_projector(kernel).matrix;

  // g_a g_b* = diag(I, A B*)
  Symbol ab = Symbol::zero(n);
  for (int j = 0; j < n; ++j)
    ab.values[static_cast<std::size_t>(j)] =
        a.multiplier(j) * std::conj(b.multiplier(j)) - 1.0;
  const Matrix gh = doubled_diag(multiplier_diag(ab));

  const Complex doubled =
      det_lu(Matrix::Identity(2 * n, 2 * n) +
             l * (gh - Matrix::Identity(2 * n, 2 * n)));

  const FiniteDPP dpp{DiscreteKernel{kernel.entries, {}}};
  const Complex gram = gram_det(dpp, a, b);
  double residual = scaled_residual(doubled, gram);
  if (n <= 10)
    residual = std::max(residual, scaled_residual(gram_brute(dpp, a, b), gram));
  return residual;
}

}  // namespace dppfock
