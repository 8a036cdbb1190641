#include "dppfock/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dppfock {

std::vector<int> SplitSpace::v() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(dim - m()));
  std::size_t k = 0;
  for (int i = 0; i < dim; ++i) {
    if (k < w.size() && w[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

std::uint64_t SplitSpace::w_mask() const {
  std::uint64_t mask = 0;
  for (const int i : w) mask |= std::uint64_t{1} << i;
  return mask;
}

SplitSpace SplitSpace::make(int dim, std::vector<int> w_indices) {
  if (dim < 0 || dim > 63) throw Error("split dimension must be in [0, 63]");
  std::sort(w_indices.begin(), w_indices.end());
  for (std::size_t k = 0; k < w_indices.size(); ++k) {
    if (w_indices[k] < 0 || w_indices[k] >= dim)
      throw Error("W index outside the space");
    if (k > 0 && w_indices[k] == w_indices[k - 1])
      throw Error("duplicate W index");
  }
  return SplitSpace{dim, std::move(w_indices)};
}

BlockOperator::BlockOperator(Matrix matrix, SplitSpace split)
    : mat_(std::move(matrix)), split_(std::move(split)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() != split_.dim)
    throw Error("operator matrix does not match the split dimension");
  if (!mat_.allFinite()) throw Error("operator has non-finite entries");
  if (split_.dim == 0) return;

  Eigen::JacobiSVD<Matrix> svd(mat_);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  if (smin <= 0.0 || smax / smin > kConditionLimit) {
    std::ostringstream os;
    os << "operator is not invertible within conditioning threshold "
       << kConditionLimit;
    throw Error(os.str());
  }
}

Matrix BlockOperator::block_a() const {
  return submatrix(mat_, split_.v(), split_.v());
}
Matrix BlockOperator::block_b() const {
  return submatrix(mat_, split_.v(), split_.w);
}
Matrix BlockOperator::block_c() const {
  return submatrix(mat_, split_.w, split_.v());
}
Matrix BlockOperator::block_d() const {
  return submatrix(mat_, split_.w, split_.w);
}

void FockVector::set(std::uint64_t monomial, Complex amplitude) {
  if (std::popcount(monomial) != split_.m())
    throw Error("monomial size does not match the split");
  if ((monomial >> split_.dim) != 0) throw Error("monomial outside the space");
  amp_[monomial] = amplitude;
}

Complex FockVector::amplitude(std::uint64_t monomial) const {
  const auto it = amp_.find(monomial);
  return it == amp_.end() ? Complex(0.0, 0.0) : it->second;
}

double FockVector::norm() const {
  double s = 0.0;
  for (const auto& [mask, z] : amp_) s += std::norm(z);
  return std::sqrt(s);
}

FockVector vacuum(const SplitSpace& split) {
  FockVector v(split);
  v.set(split.w_mask(), Complex(1.0, 0.0));
  return v;
}

FockVector coherent_state(const BlockOperator& g) {
  const SplitSpace& split = g.split();
  FockVector out(split);
  for (const std::uint64_t s : size_m_subsets(split.dim, split.m()))
    out.set(s, det_lu(submatrix(g.matrix(), split.w, mask_to_indices(s))));
  return out;
}

Complex fock_inner(const FockVector& u, const FockVector& v) {
  if (!(u.split() == v.split()))
    throw SplitMismatch("inner product requires identical splits");
  Complex sum(0.0, 0.0);
  for (const auto& [mask, z] : u.amplitudes())
    sum += z * std::conj(v.amplitude(mask));
  return sum;
}

Complex coherent_inner_det(const BlockOperator& g, const BlockOperator& h) {
  if (!(g.split() == h.split()))
    throw SplitMismatch("inner product requires identical splits");
  const SplitSpace& split = g.split();

  const Complex via_blocks =
      det_lu(g.block_c() * h.block_c().adjoint() +
             g.block_d() * h.block_d().adjoint());

  // det(I + Pi (g h* - 1)) with Pi the coordinate projector onto W
  const int n = split.dim;
  Matrix full = Matrix::Identity(n, n);
  const Matrix gh = g.matrix() * h.matrix().adjoint() - Matrix::Identity(n, n);
  for (const int i : split.w) full.row(i) += gh.row(i);
  const Complex via_projector = det_lu(full);

  if (scaled_residual(via_blocks, via_projector) > kInnerFormulaTol) {
    std::ostringstream os;
    os << "block and projector determinant formulas disagree: "
       << via_blocks << " vs " << via_projector;
    throw FormulaMismatch(os.str());
  }
  return via_blocks;
}

GlMembershipReport gl_membership_report(const BlockOperator& g) {
  GlMembershipReport r;
  r.b_hilbert_schmidt = g.block_b().norm();
  r.c_hilbert_schmidt = g.block_c().norm();

  const Matrix dm1 =
      g.block_d() - Matrix::Identity(g.split().m(), g.split().m());
  if (dm1.size() > 0) {
    Eigen::JacobiSVD<Matrix> svd(dm1);
    r.d_minus_one_trace_norm = svd.singularValues().sum();
  }
  if (g.matrix().size() > 0) {
    Eigen::JacobiSVD<Matrix> svd(g.matrix());
    const auto& sv = svd.singularValues();
    r.condition_number = sv(0) / sv(sv.size() - 1);
  }
  return r;
}

Matrix representation_matrix(const BlockOperator& g) {
  const SplitSpace& split = g.split();
  if (split.dim > 8)
    throw Error("dense representation is limited to dim <= 8");
  const std::vector<std::uint64_t> basis =
      size_m_subsets(split.dim, split.m());
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Matrix rep(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const std::vector<int> rows =
        mask_to_indices(basis[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < dim; ++j)
      rep(i, j) = det_lu(submatrix(
          g.matrix(), rows,
          mask_to_indices(basis[static_cast<std::size_t>(j)])));
  }
  return rep;
}

}  // namespace dppfock
