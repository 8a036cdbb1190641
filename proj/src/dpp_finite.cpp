#include "dppfock/dpp_finite.hpp"

#include <cmath>
#include <sstream>

namespace dppfock {

namespace {

void check_enumerable(const FiniteDPP& dpp, const char* op) {
  if (dpp.ground_size() > kMaxEnumeration) {
    std::ostringstream os;
    os << op << ": ground set of size " << dpp.ground_size()
       << " exceeds the enumeration guard (" << kMaxEnumeration << ")";
    throw GroundSetTooLarge(os.str());
  }
}

double real_minor(const Matrix& k, std::uint64_t mask) {
  const Complex d = principal_minor(k, mask);
  return d.real();
}

// det K_J for every J; indexed by bitmask.
std::vector<double> minor_table(const FiniteDPP& dpp) {
  if (dpp.minor_cache() != nullptr) return *dpp.minor_cache();
  const int n = dpp.ground_size();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<double> table(static_cast<std::size_t>(total));
  for (std::uint64_t mask = 0; mask < total; ++mask)
    table[static_cast<std::size_t>(mask)] = real_minor(dpp.kernel().entries, mask);
  return table;
}

}  // namespace

FiniteDPP FiniteDPP::with_minor_cache() const {
  if (ground_size() > 16)
    throw GroundSetTooLarge("minor cache is limited to n <= 16");
  FiniteDPP copy(kernel_);
  const std::uint64_t total = std::uint64_t{1} << ground_size();
  auto table = std::make_shared<std::vector<double>>(static_cast<std::size_t>(total));
  for (std::uint64_t mask = 0; mask < total; ++mask)
    (*table)[static_cast<std::size_t>(mask)] = real_minor(kernel_.entries, mask);
  copy.minor_cache_ = std::move(table);
  return copy;
}

double correlation(const FiniteDPP& dpp, Configuration I) {
  if (dpp.minor_cache() != nullptr)
    return (*dpp.minor_cache())[static_cast<std::size_t>(I.bits)];
  return real_minor(dpp.kernel().entries, I.bits);
}

double point_probability(const FiniteDPP& dpp, Configuration I) {
  check_enumerable(dpp, "point_probability");
  const int n = dpp.ground_size();
  const std::uint64_t ground = Configuration::full(n).bits;
  const std::uint64_t rest = ground & ~I.bits;

  // direct inclusion-exclusion over supersets J = I | S, S subset of rest
  double p = 0.0;
  std::uint64_t s = 0;
  while (true) {
    const double sign = (std::popcount(s) % 2 == 0) ? 1.0 : -1.0;
    p += sign * correlation(dpp, Configuration{I.bits | s});
    if (s == rest) break;
    s = (s - rest) & rest;  // next subset of `rest`
  }
  return p;
}

std::vector<double> all_point_probabilities(const FiniteDPP& dpp) {
  check_enumerable(dpp, "all_point_probabilities");
  const int n = dpp.ground_size();
  std::vector<double> p = minor_table(dpp);
  // superset Moebius transform: p[S] <- sum_{J >= S} (-1)^{|J\S|} det K_J
  for (int b = 0; b < n; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    for (std::uint64_t s = 0; s < p.size(); ++s)
      if (!(s & bit)) p[static_cast<std::size_t>(s)] -= p[static_cast<std::size_t>(s | bit)];
  }
  return p;
}

Complex multiplicative_functional(const Symbol& a, Configuration I) {
  Complex prod(1.0, 0.0);
  for (int j = 0; j < a.size(); ++j)
    if (I.contains(j)) prod *= a.multiplier(j);
  return prod;
}

Complex expectation_brute(const FiniteDPP& dpp, const Symbol& a) {
  check_enumerable(dpp, "expectation_brute");
  const std::vector<double> p = all_point_probabilities(dpp);
  Complex sum(0.0, 0.0);
  for (std::uint64_t mask = 0; mask < p.size(); ++mask)
    sum += p[static_cast<std::size_t>(mask)] *
           multiplicative_functional(a, Configuration{mask});
  return sum;
}

Complex expectation_det(const FiniteDPP& dpp, const Symbol& a) {
  const int n = dpp.ground_size();
  Vector d(n);
  for (int j = 0; j < n; ++j) d(j) = a.values[static_cast<std::size_t>(j)];
  return det_lu(Matrix::Identity(n, n) + dpp.kernel().entries * d.asDiagonal());
}

Complex gram_det(const FiniteDPP& dpp, const Symbol& a, const Symbol& b) {
  const int n = dpp.ground_size();
  // (1+a) conj(1+b) - 1 is the symbol of A B* - 1
  Symbol c = Symbol::zero(n);
  for (int j = 0; j < n; ++j)
    c.values[static_cast<std::size_t>(j)] =
        a.multiplier(j) * std::conj(b.multiplier(j)) - 1.0;
  return expectation_det(dpp, c);
}

Complex gram_brute(const FiniteDPP& dpp, const Symbol& a, const Symbol& b) {
  check_enumerable(dpp, "gram_brute");
  const std::vector<double> p = all_point_probabilities(dpp);
  Complex sum(0.0, 0.0);
  for (std::uint64_t mask = 0; mask < p.size(); ++mask) {
    const Configuration cfg{mask};
    sum += p[static_cast<std::size_t>(mask)] * multiplicative_functional(a, cfg) *
           std::conj(multiplicative_functional(b, cfg));
  }
  return sum;
}

std::size_t CountDistribution::flat_index(const std::vector<int>& counts) const {
  if (counts.size() != block_sizes.size())
    throw Error("count vector length does not match block count");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    const int m = block_sizes[j];
    if (counts[j] < 0 || counts[j] > m) throw Error("count out of range");
    idx = idx * static_cast<std::size_t>(m + 1) + static_cast<std::size_t>(counts[j]);
  }
  return idx;
}

double CountDistribution::prob(const std::vector<int>& counts) const {
  return probabilities[flat_index(counts)];
}

CountDistribution count_distribution(const FiniteDPP& dpp,
                                     const std::vector<Configuration>& blocks) {
  check_enumerable(dpp, "count_distribution");
  const int n = dpp.ground_size();
  const std::uint64_t ground = Configuration::full(n).bits;

  std::uint64_t seen = 0;
  for (const auto& x : blocks) {
    if ((x.bits & ~ground) != 0) throw Error("block outside ground set");
    if ((x.bits & seen) != 0) throw OverlappingBlocks("blocks must be disjoint");
    seen |= x.bits;
  }

  const std::size_t l = blocks.size();
  CountDistribution out;
  out.block_sizes.resize(l);
  std::size_t grid = 1;
  for (std::size_t j = 0; j < l; ++j) {
    out.block_sizes[j] = blocks[j].count();
    grid *= static_cast<std::size_t>(out.block_sizes[j] + 1);
  }

  // The generating function G(r_1..r_l) = det(I + K diag(sum_j (r_j-1) 1_Xj))
  // is a polynomial of degree m_j in r_j, so sampling r_j on the
  // (m_j + 1)-st roots of unity and inverting each axis by a DFT is exact.
  std::vector<Complex> g(grid);
  std::vector<int> t(l, 0);
  for (std::size_t flat = 0; flat < grid; ++flat) {
    Symbol s = Symbol::zero(n);
    for (std::size_t j = 0; j < l; ++j) {
      const int order = out.block_sizes[j] + 1;
      const Complex r = std::polar(1.0, 2.0 * kPi * t[j] / order);
      for (int i = 0; i < n; ++i)
        if (blocks[j].contains(i)) s.values[static_cast<std::size_t>(i)] = r - 1.0;
    }
    g[flat] = expectation_det(dpp, s);
    for (std::size_t j = l; j-- > 0;) {
      if (++t[j] <= out.block_sizes[j]) break;
      t[j] = 0;
    }
  }

  out.probabilities.assign(grid, 0.0);
  std::vector<int> alpha(l, 0);
  for (std::size_t pflat = 0; pflat < grid; ++pflat) {
    Complex acc(0.0, 0.0);
    std::fill(t.begin(), t.end(), 0);
    for (std::size_t gflat = 0; gflat < grid; ++gflat) {
      double angle = 0.0;
      for (std::size_t j = 0; j < l; ++j)
        angle -= 2.0 * kPi * t[j] * alpha[j] / (out.block_sizes[j] + 1);
      acc += std::polar(1.0, angle) * g[gflat];
      for (std::size_t j = l; j-- > 0;) {
        if (++t[j] <= out.block_sizes[j]) break;
        t[j] = 0;
      }
    }
    acc /= static_cast<double>(grid);
    if (std::fabs(acc.imag()) > 1e-9)
      throw Error("count_distribution: non-real probability from inversion");
    out.probabilities[pflat] = acc.real();
    for (std::size_t j = l; j-- > 0;) {
      if (++alpha[j] <= out.block_sizes[j]) break;
      alpha[j] = 0;
    }
  }

  double total = 0.0;
  for (const double p : out.probabilities) {
    if (p < -1e-10) throw Error("count_distribution: negative probability");
    total += p;
  }
  if (std::fabs(total - 1.0) > 1e-10)
    throw Error("count_distribution: probabilities do not sum to 1");
  return out;
}

}  // namespace dppfock
