#pragma once

#include <cmath>
#include <utility>

// Small numerically stable log-domain helpers shared by the density, entropy
// and oracle code.
namespace ifdist::logspace {

/// ln(1 + e^x).
inline double softplus(double x) {
  if (x > 36.0) return x + std::exp(-x);
  if (x < -37.0) return std::exp(x);
  return std::log1p(std::exp(x));
}

/// ln(1 - e^x) for x <= 0.
inline double log1mexp(double x) {
  if (x > -0.6931471805599453) return std::log(-std::expm1(x));
  return std::log1p(-std::exp(x));
}

/// ln(e^x - 1) for x > 0.
inline double log_expm1(double x) {
  if (std::isinf(x)) return x;
  return x + log1mexp(-x);
}

/// ln(e^a + e^b).
inline double logaddexp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (std::isinf(a) && a < 0) return a;
  return a + std::log1p(std::exp(b - a));
}

/// ln(1 - (1 + e^ly)^-q) for q > 0.
inline double log_one_minus_pow(double ly, double q) {
  if (ly < -40.0) return std::log(q) + ly;
  return log1mexp(-q * softplus(ly));
}

}  // namespace ifdist::logspace
