#pragma once

// Real-argument special functions used by the moment and entropy formulas.
// All functions are pure; arguments outside the domain throw DomainError.

namespace ifdist::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Euler-Mascheroni constant.
constexpr double euler_mascheroni() noexcept { return kEulerGamma; }

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// Gamma(x) for x > 0. Overflows to +inf above x ~ 171.6.
double gamma(double x);

/// psi(x) = d/dx ln Gamma(x) for x > 0.
double digamma(double x);

/// Generalized harmonic number H_x = psi(x + 1) + gamma_E, x >= 0.
/// Agrees with sum_{k=1}^{n} 1/k at integers.
double harmonic(double x);

/// ln B(a, b) for a, b > 0. Stable when one argument is large.
double log_beta(double a, double b);

/// B(a, b) for a, b > 0.
double beta(double a, double b);

/// Binomial coefficient C(n, k). Exact for n <= 60, via ln_gamma above.
double binomial(unsigned n, unsigned k);

}  // namespace ifdist::specfun
