#include "ifdist/density.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "ifdist/errors.hpp"
#include "ifdist/logspace.hpp"

namespace ifdist {
namespace {

using logspace::log1mexp;
using logspace::log_expm1;
using logspace::log_one_minus_pow;
using logspace::logaddexp;
using logspace::softplus;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Exponent comparisons at the boundary treat |e| below this as zero.
constexpr double kExponentTie = 1e-12;

double log_excess(const IFParams& params, double x) {
  return std::log((x - params.x0) / params.c);
}

// Standardized log density at the left end of the support. Near x0 the density
// behaves like z^e; the sign of e decides between 0, a finite limit and +inf.
double log_density_at_boundary(const IFParams& params) {
  const double b = params.b;
  const double q = params.q;
  double exponent = -b * q - 1.0;
  double limit = std::log(std::abs(b) * q);
  if (params.p.is_infinite()) {
    if (b > 0) return -kInf;
  } else if (b > 0) {
    const double p = params.p.value();
    const double lp1 = std::log1p(p);
    exponent = b * (p + 1.0) - 1.0;
    limit = std::log(b * q) + (q + 1.0) / q * lp1;
    if (p > 0) limit += p * (std::log(q) + lp1 / q);
  }
  if (exponent > kExponentTie) return -kInf;
  if (exponent < -kExponentTie) return kInf;
  return limit;
}

// ln of the distribution-function piece that is a plain exponential:
// F = e^A when b > 0, 1 - F = e^A when b < 0.
double log_exp_side(const IFParams& params, double t) {
  const double q = params.q;
  if (params.p.is_infinite()) return -std::exp(-params.b * q * t);
  const double p = params.p.value();
  const double ly = params.b * t + std::log1p(p) / q;
  return (p + 1.0) * log_one_minus_pow(ly, q);
}

}  // namespace

namespace formulas {

double log_density_if1(double b, double q, double t) {
  return std::log(std::abs(b) * q) + (b - 1.0) * t - (q + 1.0) * softplus(b * t);
}

double log_density_if2(double b, double q, double t) {
  const double bq = b * q;
  return std::log(std::abs(b) * q) - (bq + 1.0) * t - std::exp(-bq * t);
}

double log_density_if3(double p, double q, double t) {
  const double lp1 = std::log1p(p);
  double out = std::log(q) - (q + 1.0) * logaddexp(-lp1 / q, t);
  if (p > 0) out += p * log_one_minus_pow(t + lp1 / q, q);
  return out;
}

double log_density_general(double p, double b, double q, double t) {
  const double lp1 = std::log1p(p);
  const double ly = b * t + lp1 / q;
  double out = std::log(std::abs(b) * q) + (b - 1.0) * t -
               (q + 1.0) * (softplus(ly) - lp1 / q);
  if (p > 0) out += p * log_one_minus_pow(ly, q);
  return out;
}

}  // namespace formulas

double log_pdf_log_excess(const IFParams& params, double t) {
  if (std::isnan(t)) return t;
  if (t == kInf) return -kInf;
  double standardized = 0.0;
  if (t == -kInf) {
    standardized = log_density_at_boundary(params);
  } else {
    switch (classify(params)) {
      case Subfamily::IF1:
        standardized = formulas::log_density_if1(params.b, params.q, t);
        break;
      case Subfamily::IF2:
        standardized = formulas::log_density_if2(params.b, params.q, t);
        break;
      case Subfamily::IF3:
        standardized = formulas::log_density_if3(params.p.value(), params.q, t);
        break;
      case Subfamily::GeneralIF:
        standardized = formulas::log_density_general(params.p.value(), params.b,
                                                     params.q, t);
        break;
    }
  }
  return standardized - std::log(params.c);
}

double log_pdf(const IFParams& params, double x) {
  if (std::isnan(x)) return x;
  if (x < params.x0) return -kInf;
  return log_pdf_log_excess(params, log_excess(params, x));
}

double pdf(const IFParams& params, double x) {
  return std::exp(log_pdf(params, x));
}

double cdf(const IFParams& params, double x) {
  if (std::isnan(x)) return x;
  if (x <= params.x0) return 0.0;
  const double a = log_exp_side(params, log_excess(params, x));
  return params.b > 0 ? std::exp(a) : -std::expm1(a);
}

double survival(const IFParams& params, double x) {
  if (std::isnan(x)) return x;
  if (x <= params.x0) return 1.0;
  const double a = log_exp_side(params, log_excess(params, x));
  return params.b > 0 ? -std::expm1(a) : std::exp(a);
}

double log_excess_quantile(const IFParams& params, double log_prob, Tail tail) {
  if (!(log_prob < 0.0)) {
    throw DomainError("log probability must be negative, got " +
                      std::to_string(log_prob));
  }
  const double b = params.b;
  const double q = params.q;
  const bool exp_side = (b > 0) == (tail == Tail::Lower);
  const double a = exp_side ? log_prob : log1mexp(log_prob);

  if (params.p.is_infinite()) return std::log(-a) / (-b * q);

  const double p = params.p.value();
  const double lp1 = std::log1p(p);
  // a = (p+1) ln(1 - W) with W = (1 + y)^-q and y = (p+1)^(1/q) z^b.
  const double log_w = log1mexp(a / (p + 1.0));
  const double log1p_y = -log_w / q;
  const double ly = log_expm1(log1p_y);
  return (ly - lp1 / q) / b;
}

double quantile(const IFParams& params, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("quantile: probability must lie in (0, 1), got " +
                      std::to_string(u));
  }
  const double t = u <= 0.5
                       ? log_excess_quantile(params, std::log(u), Tail::Lower)
                       : log_excess_quantile(params, std::log1p(-u), Tail::Upper);
  return params.x0 + params.c * std::exp(t);
}

SupportPoint support_point(const IFParams& params, double t) {
  const double z = std::exp(t);
  return {params.x0 + params.c * z, z, t};
}

double open_unit_interval(std::uint64_t bits) noexcept {
  // 52 bits keep the largest value, 1 - 2^-53, below 1.
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

std::vector<double> sample(const IFParams& params, std::uint64_t seed,
                           std::size_t n) {
  std::mt19937_64 engine(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(quantile(params, open_unit_interval(engine())));
  }
  return out;
}

}  // namespace ifdist
