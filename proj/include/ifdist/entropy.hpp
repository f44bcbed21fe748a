#pragma once

#include <string>
#include <vector>

#include "ifdist/model.hpp"
#include "ifdist/oracle.hpp"

namespace ifdist {

enum class EntropyMethod { ClosedForm, ClosedFormWithFIntegral };

struct EntropyValue {
  double value;  // nats
  EntropyMethod method;
};

/// F(p, q) = (p+1) int_0^1 ln(t^(-1/q) - 1) (1-t)^p dt for finite p >= 0,
/// q > 0, to absolute error `tol`. Throws NonConvergence.
double f_integral(double p, double q, double tol);

/// Differential entropy by subfamily. The general family uses f_integral at
/// tolerance 1e-10.
EntropyValue entropy(const IFParams& params);

double entropy_if1(const IFParams& params);
double entropy_if2(const IFParams& params);
double entropy_if3(const IFParams& params);

/// The five-parameter expression, valid for any finite p (including the
/// subfamilies it reduces to).
double entropy_general(const IFParams& params, double f_tol = 1e-10);

/// One moment condition of a maximum-entropy characterization: E[phi(X)]
/// equals `expected`.
struct Constraint {
  std::string description;
  double expected;
  oracle::PointFunctional functional;
};

/// The two constraints under which the subfamily of `params` maximizes
/// entropy. Throws Unsupported for the general family.
std::vector<Constraint> maxent_constraints(const IFParams& params);

}  // namespace ifdist
