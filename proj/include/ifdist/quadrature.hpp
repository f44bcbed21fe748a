#pragma once

#include <cstddef>
#include <functional>

namespace ifdist {

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;            // also accept err <= rel_tol * |value|
  std::size_t max_panels = 10000;  // NonConvergence beyond this
};

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive 7/15-point Gauss-Kronrod on [a, b], always refining the panel with
/// the largest error estimate. Endpoints are never evaluated.
QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadOptions& opts = {});

/// Integral over [a, inf) through w = a + s / (1 - s), s in [0, 1).
QuadResult integrate_to_infinity(const Integrand& f, double a,
                                 const QuadOptions& opts = {});

/// Integral over the whole real line through w = s / (1 - s^2), s in (-1, 1).
QuadResult integrate_real_line(const Integrand& f, const QuadOptions& opts = {});

}  // namespace ifdist
