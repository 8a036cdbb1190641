#pragma once

// Exact determinantal point process on a finite ground set {0..n-1}.
//
// The process assigns each subset I the probability
//   p[I] = sum_{J >= I} (-1)^{|J \ I|} det K_J,
// and the mean of a multiplicative functional Psi_a over all subsets equals
// det(I + K diag(a)). Brute enumeration of both sides is the ground truth
// for every determinant identity in the library.

#include <cstdint>
#include <memory>
#include <vector>

#include "dppfock/kernels.hpp"

namespace dppfock {

// Enumeration over 2^n subsets is refused above this ground-set size.
inline constexpr int kMaxEnumeration = 20;

struct Configuration {
  std::uint64_t bits = 0;

  int count() const { return std::popcount(bits); }
  bool contains(int j) const { return (bits >> j) & 1u; }

  static Configuration full(int n) {
    return {n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n))};
  }
  friend bool operator==(Configuration, Configuration) = default;
};

struct Symbol {
  std::vector<Complex> values;

  int size() const { return static_cast<int>(values.size()); }
  // the induced multiplier A acts by 1 + a(j)
  Complex multiplier(int j) const { return 1.0 + values[static_cast<std::size_t>(j)]; }

  static Symbol zero(int n) { return {std::vector<Complex>(static_cast<std::size_t>(n), 0.0)}; }
};

class FiniteDPP {
 public:
  explicit FiniteDPP(DiscreteKernel kernel) : kernel_(std::move(kernel)) {}

  // Copy carrying an eagerly built table of all principal minors
  // (2^n values); only available for n <= 16.
  FiniteDPP with_minor_cache() const;

  const DiscreteKernel& kernel() const { return kernel_; }
  int ground_size() const { return kernel_.dim(); }
  const std::vector<double>* minor_cache() const { return minor_cache_.get(); }

 private:
  DiscreteKernel kernel_;
  std::shared_ptr<const std::vector<double>> minor_cache_;
};

// det of the principal submatrix K_I; det over the empty set is 1.
double correlation(const FiniteDPP& dpp, Configuration I);

// Probability that the configuration equals I exactly, by direct
// inclusion-exclusion over supersets. Throws GroundSetTooLarge for n > 20.
double point_probability(const FiniteDPP& dpp, Configuration I);

// All 2^n point probabilities at once via a superset Moebius transform of
// the principal-minor table; agrees with point_probability to 1e-12.
std::vector<double> all_point_probabilities(const FiniteDPP& dpp);

// Psi_a(I) = prod_{j in I} (1 + a(j)); empty product is 1.
Complex multiplicative_functional(const Symbol& a, Configuration I);

// sum_I p[I] Psi_a(I) over all 2^n subsets (the enumeration oracle).
Complex expectation_brute(const FiniteDPP& dpp, const Symbol& a);

// det(I + K diag(a)).
Complex expectation_det(const FiniteDPP& dpp, const Symbol& a);

// det(I + K diag((1+a) conj(1+b) - 1)); the Gram form <Psi_a, Psi_b>.
Complex gram_det(const FiniteDPP& dpp, const Symbol& a, const Symbol& b);

// sum_I p[I] Psi_a(I) conj(Psi_b(I)) (the enumeration oracle).
Complex gram_brute(const FiniteDPP& dpp, const Symbol& a, const Symbol& b);

// Joint distribution of occupancy counts over disjoint blocks, recovered
// from the determinant generating function on roots-of-unity grids.
struct CountDistribution {
  std::vector<int> block_sizes;       // m_j = |X_j|
  std::vector<double> probabilities;  // row-major over (m_j + 1) axes

  double prob(const std::vector<int>& counts) const;
  std::size_t flat_index(const std::vector<int>& counts) const;
};

CountDistribution count_distribution(const FiniteDPP& dpp,
                                     const std::vector<Configuration>& blocks);

}  // namespace dppfock
