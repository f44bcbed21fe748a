#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ifdist/model.hpp"
#include "ifdist/registry.hpp"

namespace ifdist::verify {

/// One comparison. pass <=> |expected - actual| <= tolerance, where the
/// tolerance is scaled by |expected| when `relative` is set.
struct Check {
  std::string id;
  std::string description;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool relative = false;
  bool pass = false;
};

Check make_check(std::string id, std::string description, double expected,
                 double actual, double tolerance, bool relative = false);

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerificationReport {
  std::vector<Check> checks;  // ordered by id
  Summary summary;
};

enum class Suite { Specfun, Density, Moments, Entropy, Registry, All };

std::optional<Suite> parse_suite(std::string_view name);

/// Runs the suite's checks. NonConvergence from the numerics propagates.
VerificationReport run_suite(Suite suite);

/// Sorts by id and fills the summary.
VerificationReport finalize(std::vector<Check> checks);

// ---- shared test grids -----------------------------------------------------

/// Thirty parameter sets spanning IF1, IF2, IF3 and the general family.
std::vector<IFParams> standard_grid();

/// At least three in-condition free-parameter points per named case.
std::vector<registry::FreeParams> case_points(std::string_view name);

/// Points violating the table's mean condition (empty when there is none).
std::vector<registry::FreeParams> divergent_case_points(std::string_view name);

/// Kolmogorov-Smirnov distance between the sample and the model cdf.
double ks_statistic(std::vector<double> sample, const IFParams& params);

/// Truncated-moment growth witness for a divergent E[X^r]: the truncated
/// moments at x0 + c * {1e2, 1e4, 1e6} increase with successive ratios > 1.5.
/// Returns the smaller of the two ratios (<= 1.5 means the witness failed).
double divergence_growth_ratio(const IFParams& params, unsigned r);

/// True when r sits exactly on the existence boundary (r = bq for b > 0,
/// r = -b(p+1) for finite p and b < 0). There E[X^r] diverges only
/// logarithmically and the growth ratios tend to 1.5 from below.
bool on_existence_boundary(const IFParams& params, unsigned r);

/// Witness for logarithmic divergence: the increase of the truncated moment
/// from x0 + c * 1e4 to 1e6 divided by the increase from 1e2 to 1e4. Tends to
/// 1 when the moment diverges like ln(upper) and to 0 when it converges.
double divergence_increment_ratio(const IFParams& params, unsigned r);

}  // namespace ifdist::verify
