#pragma once

// Finite truncation of the space of semi-infinite forms: with H = V + W and
// m = dim W, the basis monomials are the size-m wedges e_S, and a coherent
// state lambda(g) Upsilon has Pluecker coordinates det g[W-rows, S-cols].
//
// Minor convention used throughout: rep_matrix(g)[S][T] = det g[S, T], so
// Cauchy-Binet gives rep_matrix(g1) rep_matrix(g2) = rep_matrix(g1 g2) and
// the W-row of rep_matrix(g) is exactly coherent_state(g).

#include <cstdint>
#include <map>
#include <vector>

#include "dppfock/errors.hpp"
#include "dppfock/linalg.hpp"

namespace dppfock {

inline constexpr double kConditionLimit = 1e12;
inline constexpr double kInnerFormulaTol = 1e-10;

struct SplitSpace {
  int dim = 0;
  std::vector<int> w;  // occupied directions, strictly ascending, 0-based

  int m() const { return static_cast<int>(w.size()); }
  std::vector<int> v() const;
  std::uint64_t w_mask() const;

  static SplitSpace make(int dim, std::vector<int> w_indices);
  friend bool operator==(const SplitSpace&, const SplitSpace&) = default;
};

// Invertible operator on the split space with the block views
//   a : V->V,  b : W->V,  c : V->W,  d : W->W.
class BlockOperator {
 public:
  BlockOperator(Matrix matrix, SplitSpace split);

  const Matrix& matrix() const { return mat_; }
  const SplitSpace& split() const { return split_; }

  Matrix block_a() const;  // rows V, cols V
  Matrix block_b() const;  // rows V, cols W
  Matrix block_c() const;  // rows W, cols V
  Matrix block_d() const;  // rows W, cols W

 private:
  Matrix mat_;
  SplitSpace split_;
};

// Amplitudes on the size-m basis monomials, keyed by ascending bitmask.
class FockVector {
 public:
  explicit FockVector(SplitSpace split) : split_(std::move(split)) {}

  const SplitSpace& split() const { return split_; }
  void set(std::uint64_t monomial, Complex amplitude);
  Complex amplitude(std::uint64_t monomial) const;
  const std::map<std::uint64_t, Complex>& amplitudes() const { return amp_; }
  double norm() const;

 private:
  SplitSpace split_;
  std::map<std::uint64_t, Complex> amp_;
};

// Amplitude 1 on the wedge of the W basis vectors.
FockVector vacuum(const SplitSpace& split);

// lambda(g) Upsilon: amplitude on monomial S is det g[W, S].
FockVector coherent_state(const BlockOperator& g);

// sum_S u(S) conj(v(S)). Throws SplitMismatch.
Complex fock_inner(const FockVector& u, const FockVector& v);

// <lambda(g)Y, lambda(h)Y> by both closed forms, det(c_g c_h* + d_g d_h*)
// and det(I + Pi (g h* - 1)); returns the first after asserting agreement.
Complex coherent_inner_det(const BlockOperator& g, const BlockOperator& h);

// Finite-dimensional diagnostics of the GL(H;Pi) membership conditions.
struct GlMembershipReport {
  double b_hilbert_schmidt = 0.0;       // |b|_F
  double c_hilbert_schmidt = 0.0;       // |c|_F
  double d_minus_one_trace_norm = 0.0;  // nuclear norm of d - 1
  double condition_number = 0.0;
};

GlMembershipReport gl_membership_report(const BlockOperator& g);

// Dense action on all size-m monomials; intended for identity checks at
// desk scale, guarded to dim <= 8.
Matrix representation_matrix(const BlockOperator& g);

}  // namespace dppfock
