#include "dppfock/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dppfock {

namespace {

// Series expansion of P(a,x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Modified Lentz continued fraction for Q(a,x), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0)
    throw std::invalid_argument("gamma_q: requires a > 0, x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_squared_pvalue(double stat, int dof) {
  if (dof <= 0) throw std::invalid_argument("chi_squared_pvalue: dof <= 0");
  if (stat <= 0.0) return 1.0;
  return gamma_q(0.5 * dof, 0.5 * stat);
}

MeanStdError mean_std_error(const std::vector<std::complex<double>>& xs) {
  const auto n = static_cast<double>(xs.size());
  if (xs.empty()) return {{0.0, 0.0}, 0.0};
  std::complex<double> mean(0.0, 0.0);
  for (const auto& x : xs) mean += x;
  mean /= n;
  if (xs.size() < 2) return {mean, 0.0};
  double var = 0.0;
  for (const auto& x : xs) var += std::norm(x - mean);
  var /= (n - 1.0);
  return {mean, std::sqrt(var / n)};
}

double binomial_std_error(double p, long trials) {
  if (trials <= 0) return std::numeric_limits<double>::infinity();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace dppfock
