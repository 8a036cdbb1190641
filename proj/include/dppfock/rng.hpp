#pragma once

// Deterministic seeding and random test-object generation.
//
// Every randomized sweep derives one independent seed per case from a master
// seed with a counter, so parallel and serial runs produce identical results.

#include <cstdint>
#include <random>

#include "dppfock/linalg.hpp"

namespace dppfock {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Counter-based seed splitting: case `counter` under `master` gets a seed
// independent of every other counter value.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
  return splitmix64(master ^ splitmix64(counter + 0x632be59bd9b4e019ull));
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

// Standard complex Gaussian entry, variance 1.
inline Complex complex_gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0 / std::sqrt(2.0));
  return {g(rng), g(rng)};
}

Matrix random_ginibre(int n, std::mt19937_64& rng);

// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
Matrix random_unitary(int n, std::mt19937_64& rng);

// Hermitian matrix with eigenvalues drawn uniformly from [0,1].
Matrix random_kernel_matrix(int n, std::mt19937_64& rng);

// Rank-`rank` orthogonal projector Q Q*.
Matrix random_projector_matrix(int n, int rank, std::mt19937_64& rng);

// Complex values uniform on the disk |a| <= max_abs.
std::vector<Complex> random_symbol_values(int n, double max_abs,
                                          std::mt19937_64& rng);

// Ginibre entries scaled by 1/sqrt(n) so singular values stay O(1).
Matrix random_operator_matrix(int n, std::mt19937_64& rng);

}  // namespace dppfock
