#pragma once

// Executable forms of the two isometric-embedding identities: the projector
// case (Pi = K directly) and the doubling construction that reduces a
// general kernel to a projector on the doubled space.

#include "dppfock/dpp_finite.hpp"
#include "dppfock/fock.hpp"
#include "dppfock/kernels.hpp"

namespace dppfock {

// 2n x 2n projector  L = [[1-K, R], [R, K]]  with R = sqrt(K - K^2).
struct DoubledProjector {
  Matrix matrix;

  int doubled_dim() const { return static_cast<int>(matrix.rows()); }
};

// Builds L with R computed in the eigenbasis of K via the map
// lambda -> sqrt(max(lambda - lambda^2, 0)); negative defect beyond
// -1e-12 throws SpectrumOutOfRange. Validates L^2 = L to 1e-9.
DoubledProjector doubling_projector(const DiscreteKernel& kernel);

// g_a = diag(I, I + diag(a)) on the doubled space; split puts the second
// copy in W. The embedding checks use the projector L itself, not this
// coordinate split.
BlockOperator doubled_symbol(const Symbol& a);

// Max-norm residual of (g_a* - 1) L (g_a - 1) - diag(0, (A*-1) K (A-1)).
double block_conjugation_check(const DiscreteKernel& kernel, const Symbol& a);

// Projector kernels only (K^2 = K to 1e-9, else NotAProjector): rotates to
// the eigenbasis of K, forms the multipliers as block operators with W the
// eigenvalue-1 space, and returns the scaled residual between the Fock-side
// inner product and gram_det; for n <= 8 the explicit coherent states are
// cross-checked as well.
double projector_embedding_check(const DiscreteKernel& kernel, const Symbol& a,
                                 const Symbol& b);

// Any kernel: compares det(I + L (g_a g_b* - 1)) against gram_det, and for
// n <= 10 against gram_brute; returns the largest scaled residual.
double general_embedding_check(const DiscreteKernel& kernel, const Symbol& a,
                               const Symbol& b);

}  // namespace dppfock
