#pragma once

// Small statistics helpers for the Monte Carlo validation paths.

#include <complex>
#include <vector>

namespace dppfock {

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double gamma_q(double a, double x);

// Upper-tail p-value of a chi-squared statistic with `dof` degrees of freedom.
double chi_squared_pvalue(double stat, int dof);

struct MeanStdError {
  std::complex<double> mean;
  double std_error;  // sqrt of (sample variance of |X - mean|^2) / count
};

MeanStdError mean_std_error(const std::vector<std::complex<double>>& xs);

// Standard error of a Bernoulli frequency with success probability p.
double binomial_std_error(double p, long trials);

}  // namespace dppfock
