#include "ifdist/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "ifdist/errors.hpp"

namespace ifdist::oracle {
namespace {

// Weighted integrand for one half of the unit interval in the variable w:
// phi(Q(e^-w)) e^-w. Values that overflow in the far tail, where the weight
// has already underflowed, contribute nothing.
Integrand tail_integrand(const IFParams& params, const PointFunctional& phi,
                         Tail tail) {
  return [&params, &phi, tail](double w) {
    const double weight = std::exp(-w);
    if (weight == 0.0) return 0.0;
    const double t = log_excess_quantile(params, -w, tail);
    const double value = phi(support_point(params, t)) * weight;
    return std::isfinite(value) ? value : 0.0;
  };
}

QuadResult add(const QuadResult& a, const QuadResult& b) {
  return {a.value + b.value, a.abs_error_estimate + b.abs_error_estimate,
          a.evaluations + b.evaluations};
}

QuadOptions halved(QuadOptions opts) {
  opts.abs_tol *= 0.5;
  return opts;
}

MCResult welford(std::size_t n, std::uint64_t seed,
                 const std::function<double(double)>& draw_value) {
  if (n < 2) throw DomainError("Monte Carlo needs at least 2 draws");
  std::mt19937_64 engine(seed);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = draw_value(open_unit_interval(engine()));
    const double delta = v - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (v - mean);
  }
  const double var = m2 / static_cast<double>(n - 1);
  return {mean, std::sqrt(var / static_cast<double>(n)), n, seed};
}

}  // namespace

QuadResult quad_expectation_point(const IFParams& params,
                                  const PointFunctional& phi,
                                  const QuadOptions& opts) {
  const double ln2 = std::numbers::ln2;
  const QuadOptions half = halved(opts);
  const auto lower =
      integrate_to_infinity(tail_integrand(params, phi, Tail::Lower), ln2, half);
  const auto upper =
      integrate_to_infinity(tail_integrand(params, phi, Tail::Upper), ln2, half);
  return add(lower, upper);
}

QuadResult quad_expectation(const IFParams& params,
                            const std::function<double(double)>& phi,
                            double tol) {
  QuadOptions opts;
  opts.abs_tol = tol;
  return quad_expectation_point(
      params, [&phi](const SupportPoint& pt) { return phi(pt.x); }, opts);
}

QuadResult quad_entropy(const IFParams& params, double tol) {
  QuadOptions opts;
  opts.abs_tol = tol;
  auto r = quad_expectation_point(
      params,
      [&params](const SupportPoint& pt) {
        return -log_pdf_log_excess(params, pt.log_z);
      },
      opts);
  return r;
}

MCResult mc_expectation_point(const IFParams& params, const PointFunctional& phi,
                              std::size_t n, std::uint64_t seed) {
  return welford(n, seed, [&](double u) {
    const double t = u <= 0.5
                         ? log_excess_quantile(params, std::log(u), Tail::Lower)
                         : log_excess_quantile(params, std::log1p(-u), Tail::Upper);
    return phi(support_point(params, t));
  });
}

MCResult mc_expectation(const IFParams& params,
                        const std::function<double(double)>& phi, std::size_t n,
                        std::uint64_t seed) {
  return mc_expectation_point(
      params, [&phi](const SupportPoint& pt) { return phi(pt.x); }, n, seed);
}

double truncated_moment(const IFParams& params, unsigned r, double upper) {
  if (!(upper > params.x0)) {
    throw DomainError("truncated_moment: upper limit must exceed x0");
  }
  const double rr = r;
  const PointFunctional power = [rr](const SupportPoint& pt) {
    return std::pow(pt.x, rr);
  };
  QuadOptions opts;
  opts.abs_tol = 1e-300;
  opts.rel_tol = 1e-11;

  const double ln2 = std::numbers::ln2;
  const double f_upper = cdf(params, upper);
  if (f_upper <= 0.5) {
    // Whole range inside the lower half: u = e^-w, w >= -ln F(upper).
    const double w_start = -std::log(f_upper);
    return integrate_to_infinity(tail_integrand(params, power, Tail::Lower),
                                 w_start, opts)
        .value;
  }
  const double lower =
      integrate_to_infinity(tail_integrand(params, power, Tail::Lower), ln2, opts)
          .value;
  const double s_upper = survival(params, upper);
  const auto upper_part = tail_integrand(params, power, Tail::Upper);
  const double tail_part =
      s_upper > 0.0
          ? integrate(upper_part, ln2, -std::log(s_upper), opts).value
          : integrate_to_infinity(upper_part, ln2, opts).value;
  return lower + tail_part;
}

QuadResult normalization(const IFParams& params, double tol) {
  QuadOptions opts;
  opts.abs_tol = tol;
  // dx = c e^t dt, and the density of x carries the 1/c.
  return integrate_real_line(
      [&params](double t) {
        const double v = std::exp(log_pdf_log_excess(params, t) + t) * params.c;
        return std::isfinite(v) ? v : 0.0;
      },
      opts);
}

}  // namespace ifdist::oracle
