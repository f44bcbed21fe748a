#pragma once

#include <cstdint>
#include <vector>

#include "ifdist/model.hpp"

namespace ifdist {

/// Density, distribution function, quantile and sampling.
///
/// Internally everything is expressed in the log-excess t = ln((x - x0) / c),
/// which keeps the boundary x = x0 (t = -inf) and far tails representable
/// without cancellation in x - x0. The public x-based functions are thin
/// wrappers.

/// Which tail a probability is measured from: F(x) (Lower) or 1 - F(x) (Upper).
enum class Tail { Lower, Upper };

/// A point of the support carried in three consistent forms.
struct SupportPoint {
  double x;      // x0 + c * z (may round to x0 when z is tiny)
  double z;      // (x - x0) / c
  double log_z;  // ln z, exact even where z underflows
};

/// Probability density at x. 0 below x0; at x0 returns the limit, which may be
/// +inf when the density diverges there.
double pdf(const IFParams& params, double x);

/// ln pdf, -inf off the support.
double log_pdf(const IFParams& params, double x);

/// F(x) = P(X <= x).
double cdf(const IFParams& params, double x);

/// 1 - F(x), computed without cancellation in the upper tail.
double survival(const IFParams& params, double x);

/// Inverse of cdf for u in (0, 1); throws DomainError otherwise.
double quantile(const IFParams& params, double u);

/// n inverse-transform draws; deterministic given the seed.
std::vector<double> sample(const IFParams& params, std::uint64_t seed,
                           std::size_t n);

/// Density of X at x = x0 + c e^t, in log space. t = -inf is the boundary.
double log_pdf_log_excess(const IFParams& params, double t);

/// Log-excess t with P(X <= x) = e^log_prob (Lower) or P(X > x) = e^log_prob
/// (Upper). log_prob must be < 0.
double log_excess_quantile(const IFParams& params, double log_prob, Tail tail);

/// The support point at log-excess t.
SupportPoint support_point(const IFParams& params, double t);

/// Uniform draw in the open interval (0, 1) from the top 52 random bits.
double open_unit_interval(std::uint64_t bits) noexcept;

/// The per-subfamily density formulas for the standardized variable
/// Z = (X - x0) / c, as functions of t = ln z > -inf. Exposed so the
/// subfamily cross-checks can evaluate one family's formula on another's
/// parameters.
namespace formulas {

double log_density_if1(double b, double q, double t);
double log_density_if2(double b, double q, double t);
double log_density_if3(double p, double q, double t);
double log_density_general(double p, double b, double q, double t);

}  // namespace formulas

}  // namespace ifdist
