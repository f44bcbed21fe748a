#pragma once

#include <cstdint>
#include <functional>

#include "ifdist/density.hpp"
#include "ifdist/model.hpp"
#include "ifdist/quadrature.hpp"

namespace ifdist::oracle {

// Numerical verification engine, independent of the closed forms.
//
// Expectations are computed as E[phi(X)] = int_0^1 phi(Q(u)) du. The unit
// interval is split at 1/2 and each half is written in the tail probability
// v = e^-w, w in [ln 2, inf): the lower half uses the lower-tail quantile and
// the upper half the upper-tail quantile, so neither end loses resolution to
// rounding of u near 0 or 1.

struct MCResult {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

using PointFunctional = std::function<double(const SupportPoint&)>;

/// E[phi(X)] for phi given as a function of x. Error target `tol` (absolute).
QuadResult quad_expectation(const IFParams& params,
                            const std::function<double(double)>& phi,
                            double tol);

/// E[phi] for phi reading any of (x, z, ln z). Use this form when phi depends
/// on x - x0, which the x form cannot resolve near the boundary.
QuadResult quad_expectation_point(const IFParams& params,
                                  const PointFunctional& phi,
                                  const QuadOptions& opts);

/// Differential entropy -int f ln f in nats, as -E[ln f(X)].
QuadResult quad_entropy(const IFParams& params, double tol);

/// Sample mean and standard error of phi over n inverse-transform draws.
MCResult mc_expectation(const IFParams& params,
                        const std::function<double(double)>& phi,
                        std::size_t n, std::uint64_t seed);

MCResult mc_expectation_point(const IFParams& params, const PointFunctional& phi,
                              std::size_t n, std::uint64_t seed);

/// int_{x0}^{upper} x^r f(x) dx. Relative accuracy about 1e-10.
double truncated_moment(const IFParams& params, unsigned r, double upper);

/// int_{x0}^{inf} f(x) dx evaluated from the density alone (no cdf or
/// quantile), over the log-excess t in (-inf, inf).
QuadResult normalization(const IFParams& params, double tol);

}  // namespace ifdist::oracle
