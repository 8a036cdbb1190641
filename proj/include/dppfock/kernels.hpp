#pragma once

// Construction, validation, spectral analysis, and quadrature discretization
// of determinantal kernels.
//
// A kernel here is a Hermitian matrix K with spectrum in [0,1]; the factory
// validates both conditions and stores the clamped spectral rebuild, so
// downstream code can rely on 0 <= K <= 1 holding to round-off.

#include <functional>
#include <vector>

#include "dppfock/errors.hpp"
#include "dppfock/linalg.hpp"

namespace dppfock {

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUserSpectrumTol = 1e-10;
inline constexpr double kDiscretizationSpectrumTol = 1e-8;

struct DiscreteKernel {
  Matrix entries;
  // Quadrature nodes when the kernel came from discretize(); empty otherwise.
  std::vector<double> labels;

  int dim() const { return static_cast<int>(entries.rows()); }
};

struct SpectralData {
  RealVector eigenvalues;  // descending, clamped into [0,1]
  Matrix eigenvectors;     // unitary; column k pairs with eigenvalues(k)
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lo = 0.0;
  double hi = 0.0;

  int size() const { return static_cast<int>(nodes.size()); }
};

// Pointwise evaluation contract K(x, y); must satisfy
// eval(x,y) == conj(eval(y,x)).
using KernelFunction = std::function<Complex(double, double)>;

// Validates Hermiticity (relative tolerance 1e-10) and spectrum within
// [-spectrum_tol, 1 + spectrum_tol], then rebuilds the matrix from the
// clamped eigenvalues. Throws NotHermitian / SpectrumOutOfRange.
DiscreteKernel make_discrete_kernel(const Matrix& matrix,
                                    double spectrum_tol = kUserSpectrumTol);

// Eigendecomposition with eigenvalues clamped into [0,1] and sorted
// descending (ties keep the eigensolver's output order).
SpectralData spectral_decompose(const DiscreteKernel& kernel);

// Dyson sine kernel sin(x-y) / (pi (x-y)); the diagonal is the removable
// singularity limit 1/pi.
double sine_kernel(double x, double y);

// n-point Gauss-Legendre rule mapped to [lo, hi]. Throws BadInterval.
QuadratureRule gauss_legendre(int n, double lo, double hi);

// Symmetrized Nystrom discretization  M_ij = sqrt(w_i) f(x_i,x_j) sqrt(w_j)
// with labels = nodes. Uses the wider discretization spectrum tolerance;
// SpectrumOutOfRange beyond that signals under-resolution.
DiscreteKernel discretize(const KernelFunction& f, const QuadratureRule& q);

}  // namespace dppfock
