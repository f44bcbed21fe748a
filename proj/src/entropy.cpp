#include "ifdist/entropy.hpp"

#include <cmath>
#include <numbers>

#include "ifdist/errors.hpp"
#include "ifdist/logspace.hpp"
#include "ifdist/quadrature.hpp"
#include "ifdist/specfun.hpp"

namespace ifdist {

using specfun::euler_mascheroni;
using specfun::harmonic;

double f_integral(double p, double q, double tol) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw DomainError("f_integral: p must be finite and >= 0");
  if (!(q > 0.0)) throw DomainError("f_integral: q must be positive");
  if (!(tol > 0.0)) throw DomainError("f_integral: tol must be positive");

  // Split at t = 1/2. Near 0 put t = e^-s, near 1 put t = 1 - e^-s; both
  // halves become integrals over s in [ln 2, inf) with smooth integrands.
  const double ln2 = std::numbers::ln2;
  auto near_zero = [p, q](double s) {
    const double log_one_minus_t = logspace::log1mexp(-s);
    return logspace::log_expm1(s / q) * std::exp(p * log_one_minus_t - s);
  };
  auto near_one = [p, q](double s) {
    const double weight = std::exp(-(p + 1.0) * s);
    if (weight == 0.0) return 0.0;
    // -ln t = e^-s (1 + O(e^-s)); past s = 40 the log of it is -s - ln q.
    if (s > 40.0) return (-s - std::log(q)) * weight;
    const double log_t = logspace::log1mexp(-s);
    return logspace::log_expm1(-log_t / q) * weight;
  };
  QuadOptions opts;
  opts.abs_tol = 0.5 * tol / (p + 1.0);
  const double a = integrate_to_infinity(near_zero, ln2, opts).value;
  const double b = integrate_to_infinity(near_one, ln2, opts).value;
  return (p + 1.0) * (a + b);
}

namespace {

// H_{q-1} = psi(q) + gamma_E, defined for every q > 0.
double harmonic_of_q_minus_one(double q) {
  return specfun::digamma(q) + euler_mascheroni();
}

double neg_log_rate(const IFParams& params) {
  return -std::log(std::abs(params.b) * params.q / params.c);
}

}  // namespace

double entropy_if1(const IFParams& params) {
  const double b = params.b;
  const double q = params.q;
  return neg_log_rate(params) + (b - 1.0) / b * harmonic_of_q_minus_one(q) +
         (q + 1.0) / q;
}

double entropy_if2(const IFParams& params) {
  const double bq = params.b * params.q;
  return neg_log_rate(params) + (bq + 1.0) / bq * euler_mascheroni() + 1.0;
}

double entropy_if3(const IFParams& params) {
  const double p = params.p.value();
  const double q = params.q;
  return -std::log(q / params.c) +
         (q + 1.0) / q * (harmonic(p + 1.0) - std::log1p(p)) + p / (p + 1.0);
}

double entropy_general(const IFParams& params, double f_tol) {
  const double p = params.p.value();
  const double b = params.b;
  const double q = params.q;
  const double bq = b * q;
  const double f_term = b == 1.0 ? 0.0 : (b - 1.0) / b * f_integral(p, q, f_tol);
  return neg_log_rate(params) - f_term - (bq + 1.0) / bq * std::log1p(p) +
         (q + 1.0) / q * harmonic(p + 1.0) + p / (p + 1.0);
}

EntropyValue entropy(const IFParams& params) {
  switch (classify(params)) {
    case Subfamily::IF1: return {entropy_if1(params), EntropyMethod::ClosedForm};
    case Subfamily::IF2: return {entropy_if2(params), EntropyMethod::ClosedForm};
    case Subfamily::IF3: return {entropy_if3(params), EntropyMethod::ClosedForm};
    case Subfamily::GeneralIF: break;
  }
  return {entropy_general(params, 1e-10), EntropyMethod::ClosedFormWithFIntegral};
}

std::vector<Constraint> maxent_constraints(const IFParams& params) {
  const double b = params.b;
  const double q = params.q;
  switch (classify(params)) {
    case Subfamily::IF1:
      return {
          {"E[ln((x-x0)/c)] = -H_{q-1}/b", -harmonic_of_q_minus_one(q) / b,
           [](const SupportPoint& pt) { return pt.log_z; }},
          {"E[ln(1+((x-x0)/c)^b)] = 1/q", 1.0 / q,
           [b](const SupportPoint& pt) { return logspace::softplus(b * pt.log_z); }},
      };
    case Subfamily::IF2:
      return {
          {"E[ln((x-x0)/c)] = gamma_E/(bq)", euler_mascheroni() / (b * q),
           [](const SupportPoint& pt) { return pt.log_z; }},
          {"E[((x-x0)/c)^(-bq)] = 1", 1.0,
           [bq = b * q](const SupportPoint& pt) { return std::exp(-bq * pt.log_z); }},
      };
    case Subfamily::IF3: {
      const double p = params.p.value();
      const double lp1 = std::log1p(p);
      return {
          {"E[ln((p+1)^(-1/q)+(x-x0)/c)] = (H_{p+1}-ln(p+1))/q",
           (harmonic(p + 1.0) - lp1) / q,
           [lp1, q](const SupportPoint& pt) {
             return logspace::logaddexp(-lp1 / q, pt.log_z);
           }},
          {"E[ln(1-(1+(p+1)^(1/q)(x-x0)/c)^(-q))] = -1/(p+1)", -1.0 / (p + 1.0),
           [lp1, q](const SupportPoint& pt) {
             return logspace::log_one_minus_pow(pt.log_z + lp1 / q, q);
           }},
      };
    }
    case Subfamily::GeneralIF: break;
  }
  throw Unsupported("maximum-entropy constraints are only known for IF1, IF2, IF3");
}

}  // namespace ifdist
