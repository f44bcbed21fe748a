#include "ifdist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ifdist/density.hpp"
#include "ifdist/entropy.hpp"
#include "ifdist/format.hpp"
#include "ifdist/moments.hpp"
#include "ifdist/oracle.hpp"
#include "ifdist/specfun.hpp"

namespace ifdist::verify {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string label(const IFParams& params) { return render(params); }

std::string index_id(const std::string& prefix, std::size_t i) {
  std::string n = std::to_string(i);
  if (n.size() < 3) n.insert(0, 3 - n.size(), '0');
  return prefix + "." + n;
}

void append(std::vector<Check>& out, std::vector<Check> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
}

// Boolean properties are reported as expected 1, actual 1 or 0, tolerance 0.
Check property(std::string id, std::string description, bool holds) {
  return make_check(std::move(id), std::move(description), 1.0, holds ? 1.0 : 0.0, 0.0);
}

// ---- specfun ------------------------------------------------------------

std::vector<Check> specfun_checks() {
  using namespace specfun;
  std::vector<Check> out;

  double worst = 0.0;
  for (double x = 0.5; x <= 100.0; x += 0.37) {
    worst = std::max(worst, std::abs(ln_gamma(x + 1) - ln_gamma(x) - std::log(x)));
  }
  out.push_back(make_check("specfun.ln_gamma.recurrence",
                           "max |lnG(x+1) - lnG(x) - ln x|, x in [0.5, 100]", 0.0,
                           worst, 1e-12));

  worst = 0.0;
  for (double x = 0.01; x < 1.0; x += 0.0137) {
    const double lhs = std::exp(ln_gamma(x) + ln_gamma(1 - x));
    const double rhs = std::numbers::pi / std::sin(std::numbers::pi * x);
    worst = std::max(worst, std::abs(lhs / rhs - 1));
  }
  out.push_back(make_check("specfun.ln_gamma.reflection",
                           "max relative error of G(x)G(1-x) vs pi/sin(pi x)", 0.0,
                           worst, 1e-10));

  out.push_back(make_check("specfun.ln_gamma.half", "lnG(1/2) = ln sqrt(pi)",
                           0.5 * std::log(std::numbers::pi), ln_gamma(0.5), 1e-13,
                           true));

  worst = 0.0;
  for (int n = 1; n <= 10000; ++n) {
    worst = std::max(worst, std::abs(harmonic(n) - harmonic(n - 1) - 1.0 / n));
  }
  out.push_back(make_check("specfun.harmonic.difference",
                           "max |H_n - H_{n-1} - 1/n|, n <= 1e4", 0.0, worst, 1e-13));

  double direct = 0.0;
  for (int k = 1; k <= 1000; ++k) direct += 1.0 / k;
  out.push_back(make_check("specfun.harmonic.integer", "H_1000 equals the direct sum",
                           direct, harmonic(1000), 1e-14));

  worst = 0.0;
  const double step = 1e-5;
  for (double x = 0.1; x <= 50.0; x += 0.173) {
    const double fd = (ln_gamma(x + step) - ln_gamma(x - step)) / (2 * step);
    worst = std::max(worst, std::abs(fd - digamma(x)));
  }
  out.push_back(make_check("specfun.digamma.finite_difference",
                           "max |psi(x) - centered difference of lnG|, x in [0.1, 50]",
                           0.0, worst, 1e-6));

  out.push_back(make_check("specfun.digamma.one", "psi(1) + gamma_E = 0", 0.0,
                           digamma(1.0) + euler_mascheroni(), 1e-15));
  out.push_back(make_check("specfun.euler.limit", "H_1001 - ln(1001) approaches gamma_E",
                           euler_mascheroni(), harmonic(1001) - std::log(1001.0), 1e-3));
  out.push_back(make_check("specfun.log_beta.half_two", "ln B(1/2, 2) = ln(4/3)",
                           std::log(4.0 / 3.0), log_beta(0.5, 2), 1e-14));
  out.push_back(make_check("specfun.log_beta.two_three", "ln B(2, 3) = ln(1/12)",
                           std::log(1.0 / 12.0), log_beta(2, 3), 1e-14));
  return out;
}

// ---- density ------------------------------------------------------------

std::vector<Check> density_checks() {
  std::vector<Check> out;
  const auto grid = standard_grid();
  const std::vector<double> probes = {1e-6, 0.01, 0.1, 0.2, 0.3, 0.4, 0.5,
                                      0.6,  0.7,  0.8, 0.9, 0.99, 1 - 1e-6};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& params = grid[i];
    const std::string tag = " for " + label(params);

    out.push_back(make_check(index_id("density.normalization", i),
                             "integral of pdf over support" + tag, 1.0,
                             oracle::normalization(params, 1e-11).value, 1e-9));

    double roundtrip = 0.0;
    for (double u : probes) {
      roundtrip = std::max(roundtrip, std::abs(cdf(params, quantile(params, u)) - u));
    }
    out.push_back(make_check(index_id("density.roundtrip", i),
                             "max |cdf(quantile(u)) - u|" + tag, 0.0, roundtrip, 1e-10));

    double fd_error = 0.0;
    for (double u = 0.05; u < 0.96; u += 0.05) {
      const double x = quantile(params, u);
      const double f = pdf(params, x);
      if (!(f > 1e-12)) continue;
      const double h = 1e-6 * (x - params.x0);
      const double fd = (cdf(params, x + h) - cdf(params, x - h)) / (2 * h);
      fd_error = std::max(fd_error, std::abs(fd / f - 1));
    }
    out.push_back(make_check(index_id("density.cdf_derivative", i),
                             "max relative |cdf' - pdf|" + tag, 0.0, fd_error, 1e-5));

    const std::size_t n = 100000;
    const double d = ks_statistic(sample(params, 1000 + i, n), params);
    out.push_back(make_check(index_id("density.ks", i),
                             "KS distance of 1e5 draws vs cdf (alpha 0.01)" + tag, 0.0,
                             d, 1.63 / std::sqrt(static_cast<double>(n))));
  }

  // IF3 approaches IF2 as p grows (b = 1).
  for (double q : {1.0, 2.0, 5.0}) {
    const auto if2 = validate(kInf, 1, 1, q, 0);
    double previous = kInf;
    bool decreasing = true;
    double last = 0;
    for (double p : {1e2, 1e4, 1e6}) {
      const auto if3 = validate(p, 1, 1, q, 0);
      double sup = 0.0;
      for (int k = 1; k <= 100; ++k) {
        const double x = 0.05 * k;
        sup = std::max(sup, std::abs(pdf(if3, x) - pdf(if2, x)));
      }
      decreasing = decreasing && sup < previous;
      previous = last = sup;
    }
    out.push_back(property("density.if3_to_if2.q" + format_number(q),
                           "sup |pdf_IF3 - pdf_IF2| decreases over p = 1e2, 1e4, 1e6 "
                           "(final " + format_number(last) + ")",
                           decreasing));
  }

  // IF1 and IF3 formulas coincide at p = 0, b = 1.
  double worst = 0.0;
  for (double q : {0.5, 1.0, 2.0, 3.7}) {
    for (double t = -8; t <= 8; t += 0.25) {
      const double a = formulas::log_density_if1(1.0, q, t);
      const double b = formulas::log_density_if3(0.0, q, t);
      worst = std::max(worst, std::abs(std::exp(a) - std::exp(b)));
    }
  }
  out.push_back(make_check("density.if1_if3_intersection",
                           "max |pdf_IF1 - pdf_IF3| at p = 0, b = 1", 0.0, worst, 1e-12));
  return out;
}

// ---- moments ------------------------------------------------------------

std::vector<Check> moment_checks() {
  std::vector<Check> out;
  std::size_t agreement = 0;
  std::size_t witness = 0;
  for (const auto& params : standard_grid()) {
    if (classify(params) == Subfamily::GeneralIF) continue;
    for (unsigned r = 1; r <= 3; ++r) {
      const auto m = moment(params, r);
      const std::string tag = "E[X^" + std::to_string(r) + "] for " + label(params);
      if (m.is_finite()) {
        QuadOptions opts;
        opts.abs_tol = 1e-300;
        opts.rel_tol = 1e-10;
        const double quad =
            oracle::quad_expectation_point(
                params,
                [r](const SupportPoint& pt) { return std::pow(pt.x, double(r)); }, opts)
                .value;
        out.push_back(make_check(index_id("moments.oracle", agreement++),
                                 "closed form vs quadrature, " + tag, quad, m.value(),
                                 1e-7, true));
      } else {
        if (on_existence_boundary(params, r)) {
          const double ratio = divergence_increment_ratio(params, r);
          out.push_back(property(index_id("moments.divergence_witness", witness++),
                                 "divergent " + tag +
                                     " on the boundary: truncated increments per two "
                                     "decades stay above 1/2 (ratio " +
                                     format_number(ratio) + ")",
                                 ratio > 0.5));
        } else {
          const double ratio = divergence_growth_ratio(params, r);
          out.push_back(property(index_id("moments.divergence_witness", witness++),
                                 "divergent " + tag + ": min truncated growth ratio " +
                                     format_number(ratio) + " > 1.5",
                                 ratio > 1.5));
        }
      }
    }
  }

  // Binomial shift in the location.
  std::size_t shift = 0;
  for (const auto& params : standard_grid()) {
    if (params.x0 == 0.0 || classify(params) == Subfamily::GeneralIF) continue;
    IFParams origin = params;
    origin.x0 = 0.0;
    for (unsigned r = 1; r <= 3; ++r) {
      const auto m = moment(params, r);
      if (!m.is_finite()) continue;
      double sum = 0.0;
      for (unsigned i = 0; i <= r; ++i) {
        sum += specfun::binomial(r, i) * std::pow(params.x0, i) *
               moment(origin, r - i).value();
      }
      out.push_back(make_check(index_id("moments.binomial_shift", shift++),
                               "E[X^" + std::to_string(r) +
                                   "] from shifted moments for " + label(params),
                               sum, m.value(), 1e-10, true));
    }
  }

  std::size_t cross = 0;
  for (double q : {1.5, 2.5, 3.7, 6.0}) {
    for (double c : {0.5, 2.0}) {
      const auto params = validate(0, 1, c, q, 0.25);
      for (unsigned r = 1; r < q; ++r) {
        out.push_back(make_check(index_id("moments.if1_if3_intersection", cross++),
                                 "IF1 and IF3 moment formulas agree, r=" +
                                     std::to_string(r) + " for " + label(params),
                                 moment_if1(params, r).value(),
                                 moment_if3(params, r).value(), 1e-10, true));
      }
    }
  }
  return out;
}

// ---- entropy ------------------------------------------------------------

std::vector<Check> entropy_checks() {
  std::vector<Check> out;
  const auto grid = standard_grid();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& params = grid[i];
    out.push_back(make_check(index_id("entropy.oracle", i),
                             "closed form vs -E[ln f] for " + label(params),
                             oracle::quad_entropy(params, 1e-9).value,
                             entropy(params).value, 1e-7));
  }

  for (double q : {1.0, 2.0, 5.0}) {
    const double h2 = entropy(validate(kInf, 1, 1, q, 0)).value;
    std::vector<double> gaps;
    for (double p : {1e2, 1e4, 1e6}) {
      gaps.push_back(std::abs(entropy(validate(p, 1, 1, q, 0)).value - h2));
    }
    out.push_back(make_check("entropy.limit.q" + format_number(q) + ".gap",
                             "|h_IF3(1e6) - h_IF2|, b = 1", 0.0, gaps[2], 1e-3));
    out.push_back(property("entropy.limit.q" + format_number(q) + ".monotone",
                           "|h_IF3(p) - h_IF2| decreases over p = 1e2, 1e4, 1e6",
                           gaps[0] > gaps[1] && gaps[1] > gaps[2]));
  }

  std::size_t k = 0;
  for (double b : {-2.0, -0.5, 0.5, 2.0, 3.0}) {
    for (double q : {0.5, 1.0, 2.5}) {
      const auto params = validate(0, b, 1.5, q, 0);
      out.push_back(make_check(index_id("entropy.general_vs_if1", k++),
                               "general formula at p = 0 for " + label(params),
                               entropy_if1(params), entropy_general(params), 1e-8));
    }
  }
  k = 0;
  for (double p : {0.5, 1.0, 3.0, 10.0}) {
    for (double q : {0.7, 2.0, 4.0}) {
      const auto params = validate(p, 1, 2.0, q, 0);
      out.push_back(make_check(index_id("entropy.general_vs_if3", k++),
                               "general formula at b = 1 for " + label(params),
                               entropy_if3(params), entropy_general(params), 1e-8));
    }
  }

  k = 0;
  for (const auto& params : grid) {
    if (classify(params) == Subfamily::GeneralIF) continue;
    for (const auto& c : maxent_constraints(params)) {
      QuadOptions opts;
      opts.abs_tol = 1e-10;
      out.push_back(make_check(index_id("entropy.constraint", k++),
                               c.description + " for " + label(params), c.expected,
                               oracle::quad_expectation_point(params, c.functional, opts)
                                   .value,
                               1e-7));
    }
  }

  k = 0;
  for (const auto& params : grid) {
    IFParams scaled = params;
    scaled.c *= 3.5;
    out.push_back(make_check(index_id("entropy.scale_shift", k++),
                             "h(3.5 c) - h(c) = ln 3.5 for " + label(params),
                             std::log(3.5),
                             entropy(scaled).value - entropy(params).value, 1e-10));
  }
  return out;
}

// ---- registry -----------------------------------------------------------

std::vector<Check> registry_checks() {
  std::vector<Check> out;
  for (const auto& name : registry::list_cases()) {
    std::size_t k = 0;
    for (const auto& fp : case_points(name)) {
      const auto params = registry::resolve(name, fp);
      const std::string tag = " for " + name + " at " + label(params);
      const auto tm = registry::table_mean(name, fp);
      const auto cm = moment(params, 1);
      out.push_back(make_check(index_id("registry." + name + ".mean", k),
                               "tabulated mean vs moment formula" + tag, tm.value(),
                               cm.is_finite() ? cm.value() : kInf, 1e-10, true));
      out.push_back(make_check(index_id("registry." + name + ".entropy", k),
                               "tabulated entropy vs entropy formula" + tag,
                               registry::table_entropy(name, fp),
                               entropy(params).value, 1e-10));
      if (cm.is_finite()) {
        QuadOptions opts;
        opts.abs_tol = 1e-300;
        opts.rel_tol = 1e-10;
        const double quad =
            oracle::quad_expectation_point(
                params, [](const SupportPoint& pt) { return pt.x; }, opts)
                .value;
        out.push_back(make_check(index_id("registry." + name + ".mean_oracle", k),
                                 "moment formula vs quadrature" + tag, quad, cm.value(),
                                 1e-7, true));
      }
      out.push_back(make_check(index_id("registry." + name + ".entropy_oracle", k),
                               "entropy formula vs -E[ln f]" + tag,
                               oracle::quad_entropy(params, 1e-9).value,
                               entropy(params).value, 1e-7));
      std::size_t j = 0;
      for (const auto& c : registry::table_constraints(name, fp)) {
        QuadOptions opts;
        opts.abs_tol = 1e-10;
        out.push_back(make_check(
            index_id("registry." + name + ".constraint", k) + "." + std::to_string(j++),
            c.description + tag, c.expected,
            oracle::quad_expectation_point(params, c.functional, opts).value, 1e-7));
      }
      ++k;
    }
    k = 0;
    for (const auto& fp : divergent_case_points(name)) {
      const auto params = registry::resolve(name, fp);
      out.push_back(property(index_id("registry." + name + ".divergent", k++),
                             "mean condition fails, moment formula diverges for " +
                                 label(params),
                             registry::table_mean(name, fp).is_divergent() &&
                                 moment(params, 1).is_divergent()));
    }
  }
  return out;
}

}  // namespace

Check make_check(std::string id, std::string description, double expected,
                 double actual, double tolerance, bool relative) {
  const double bound = relative ? tolerance * std::abs(expected) : tolerance;
  const bool pass = std::abs(expected - actual) <= bound ||
                    (expected == actual && std::isfinite(expected));
  return {std::move(id), std::move(description), expected, actual, tolerance,
          relative, pass};
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "specfun") return Suite::Specfun;
  if (name == "density") return Suite::Density;
  if (name == "moments") return Suite::Moments;
  if (name == "entropy") return Suite::Entropy;
  if (name == "registry") return Suite::Registry;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

VerificationReport finalize(std::vector<Check> checks) {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.id < b.id; });
  VerificationReport report;
  report.summary.total = checks.size();
  for (const auto& c : checks) (c.pass ? report.summary.passed : report.summary.failed)++;
  report.checks = std::move(checks);
  return report;
}

VerificationReport run_suite(Suite suite) {
  std::vector<Check> checks;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Specfun) append(checks, specfun_checks());
  if (all || suite == Suite::Density) append(checks, density_checks());
  if (all || suite == Suite::Moments) append(checks, moment_checks());
  if (all || suite == Suite::Entropy) append(checks, entropy_checks());
  if (all || suite == Suite::Registry) append(checks, registry_checks());
  return finalize(std::move(checks));
}

std::vector<IFParams> standard_grid() {
  struct Row { double p, b, c, q, x0; };
  static const Row rows[] = {
      // IF1
      {0, 1, 1, 1, 0}, {0, 2, 1, 3, 0}, {0, 0.5, 2, 1.5, 1}, {0, -2, 1, 3, 0},
      {0, -0.5, 1, 2, 0.5}, {0, 3, 0.5, 0.4, 0}, {0, 1, 3, 2.5, 2}, {0, 0.8, 1, 1, 0},
      // IF2
      {kInf, -1, 1, 1, 0}, {kInf, -1, 2, 2, 0}, {kInf, 1, 1, 2, 0}, {kInf, 1.5, 2, 2, 1},
      {kInf, -0.7, 1, 3, 0}, {kInf, -2, 0.5, 0.8, 3}, {kInf, 0.5, 1, 3, 0},
      // IF3
      {1, 1, 1, 2, 0}, {2, 1, 1, 1, 0}, {3, 1, 2, 5, 0.5}, {0.5, 1, 1, 0.7, 0},
      {10, 1, 1, 3, 0}, {100, 1, 0.5, 1.5, 1}, {1, 1, 1, 2, 0.7071067811865476},
      // general
      {2, 3, 1, 2, 0}, {2, -1, 1, 1, 0}, {5, 0.8, 3, 2.5, 0.5}, {0.5, 2, 1, 1, 0},
      {3, -0.5, 2, 2, 1}, {1, 0.5, 1, 4, 0}, {20, 2, 1, 0.5, 0}, {4, -2, 1, 0.6, 0},
  };
  std::vector<IFParams> out;
  for (const auto& r : rows) out.push_back(validate(r.p, r.b, r.c, r.q, r.x0));
  return out;
}

std::vector<registry::FreeParams> case_points(std::string_view name) {
  using FP = registry::FreeParams;
  if (name == "pareto4")
    return {FP{{"gamma", 0.5}, {"c", 1}, {"q", 2}, {"x0", 0}},
            FP{{"gamma", 0.25}, {"c", 2}, {"q", 3}, {"x0", 1}},
            FP{{"gamma", 1.5}, {"c", 0.7}, {"q", 4}, {"x0", 0.5}}};
  if (name == "lindsay_burr3")
    return {FP{{"b", -2}, {"c", 1}, {"q", 1}, {"x0", 0}},
            FP{{"b", -1.5}, {"c", 2}, {"q", 0.5}, {"x0", 1}},
            FP{{"b", -3}, {"c", 0.5}, {"q", 2.5}, {"x0", 0.2}}};
  if (name == "pareto2")
    return {FP{{"c", 1}, {"q", 2}, {"x0", 0}}, FP{{"c", 2}, {"q", 3.5}, {"x0", 1}},
            FP{{"c", 0.5}, {"q", 1.5}, {"x0", 3}}};
  if (name == "pareto3")
    return {FP{{"gamma", 0.5}, {"c", 1}, {"x0", 0}},
            FP{{"gamma", 0.2}, {"c", 2}, {"x0", 1}},
            FP{{"gamma", 0.8}, {"c", 0.5}, {"x0", 0.3}}};
  if (name == "tadikamalla_burr12")
    return {FP{{"b", 2}, {"c", 1}, {"q", 1}}, FP{{"b", 0.5}, {"c", 2}, {"q", 3}},
            FP{{"b", 3}, {"c", 0.7}, {"q", 0.6}}};
  if (name == "fisk")
    return {FP{{"b", 2}, {"c", 1}}, FP{{"b", 3}, {"c", 2}}, FP{{"b", 1.5}, {"c", 0.5}}};
  if (name == "lomax")
    return {FP{{"c", 1}, {"q", 2}}, FP{{"c", 3}, {"q", 1.5}}, FP{{"c", 0.5}, {"q", 4}}};
  if (name == "pareto1")
    return {FP{{"q", 2}, {"x0", 1}}, FP{{"q", 3}, {"x0", 2}}, FP{{"q", 1.5}, {"x0", 0.5}}};
  if (name == "burr12")
    return {FP{{"b", 2}, {"q", 1}}, FP{{"b", 0.5}, {"q", 3}}, FP{{"b", 4}, {"q", 0.5}}};
  if (name == "weibull")
    return {FP{{"c", 1}, {"q", 2}, {"x0", 0}}, FP{{"c", 2}, {"q", 0.5}, {"x0", 1}},
            FP{{"c", 0.7}, {"q", 3}, {"x0", 0.3}}};
  if (name == "frechet")
    return {FP{{"c", 1}, {"q", 2}, {"x0", 0}}, FP{{"c", 2}, {"q", 3}, {"x0", 1}},
            FP{{"c", 0.5}, {"q", 1.5}, {"x0", 0.2}}};
  if (name == "gumbel2")
    return {FP{{"c", 1}, {"q", 2}}, FP{{"c", 2}, {"q", 4}}, FP{{"c", 0.5}, {"q", 1.3}}};
  if (name == "rayleigh") return {FP{{"c", 1}}, FP{{"c", 2}}, FP{{"c", 0.3}}};
  if (name == "exponential") return {FP{{"c", 1}}, FP{{"c", 3}}, FP{{"c", 0.25}}};
  if (name == "generalized_lomax")
    return {FP{{"m", 2}, {"c", 1}, {"q", 2}}, FP{{"m", 3}, {"c", 2}, {"q", 3}},
            FP{{"m", 1.5}, {"c", 0.5}, {"q", 1.5}}, FP{{"m", 5}, {"c", 1}, {"q", 4}}};
  if (name == "stoppa")
    return {FP{{"m", 2}, {"c", 1}, {"q", 2}}, FP{{"m", 3}, {"c", 2}, {"q", 3}},
            FP{{"m", 1.5}, {"c", 0.5}, {"q", 1.5}}};
  return {};
}

std::vector<registry::FreeParams> divergent_case_points(std::string_view name) {
  using FP = registry::FreeParams;
  if (name == "pareto4")
    return {FP{{"gamma", 2}, {"c", 1}, {"q", 1.5}, {"x0", 0}},
            FP{{"gamma", 1}, {"c", 1}, {"q", 1}, {"x0", 1}}};
  if (name == "lindsay_burr3")
    return {FP{{"b", -1}, {"c", 1}, {"q", 2}, {"x0", 0}},
            FP{{"b", -0.5}, {"c", 2}, {"q", 1}, {"x0", 0}}};
  if (name == "pareto2")
    return {FP{{"c", 1}, {"q", 1}, {"x0", 0}}, FP{{"c", 1}, {"q", 0.5}, {"x0", 2}}};
  if (name == "pareto3")
    return {FP{{"gamma", 1}, {"c", 1}, {"x0", 0}}, FP{{"gamma", 2}, {"c", 1}, {"x0", 0}}};
  if (name == "tadikamalla_burr12")
    return {FP{{"b", 0.5}, {"c", 1}, {"q", 2}}, FP{{"b", 2}, {"c", 1}, {"q", 0.3}}};
  if (name == "fisk") return {FP{{"b", 1}, {"c", 1}}, FP{{"b", 0.5}, {"c", 2}}};
  if (name == "lomax") return {FP{{"c", 1}, {"q", 1}}, FP{{"c", 2}, {"q", 0.7}}};
  if (name == "pareto1") return {FP{{"q", 1}, {"x0", 1}}, FP{{"q", 0.5}, {"x0", 2}}};
  if (name == "burr12") return {FP{{"b", 1}, {"q", 1}}, FP{{"b", 0.4}, {"q", 2}}};
  if (name == "frechet")
    return {FP{{"c", 1}, {"q", 1}, {"x0", 0}}, FP{{"c", 1}, {"q", 0.5}, {"x0", 1}}};
  if (name == "gumbel2") return {FP{{"c", 1}, {"q", 1}}, FP{{"c", 2}, {"q", 0.8}}};
  if (name == "generalized_lomax")
    return {FP{{"m", 2}, {"c", 1}, {"q", 1}}, FP{{"m", 3}, {"c", 1}, {"q", 0.5}}};
  if (name == "stoppa")
    return {FP{{"m", 2}, {"c", 1}, {"q", 1}}, FP{{"m", 3}, {"c", 1}, {"q", 0.5}}};
  return {};
}

double ks_statistic(std::vector<double> sample, const IFParams& params) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(params, sample[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

double divergence_growth_ratio(const IFParams& params, unsigned r) {
  double previous = 0.0;
  double ratio = kInf;
  for (double scale : {1e2, 1e4, 1e6}) {
    const double m = oracle::truncated_moment(params, r, params.x0 + params.c * scale);
    if (previous > 0.0) ratio = std::min(ratio, m / previous);
    previous = m;
  }
  return ratio;
}

bool on_existence_boundary(const IFParams& params, unsigned r) {
  const double edge = params.b > 0 ? params.b * params.q
                      : params.p.is_finite() ? -params.b * (params.p.value() + 1.0)
                                             : kInf;
  return std::abs(edge - r) <= 1e-12 * r;
}

double divergence_increment_ratio(const IFParams& params, unsigned r) {
  std::vector<double> m;
  for (double scale : {1e2, 1e4, 1e6}) {
    m.push_back(oracle::truncated_moment(params, r, params.x0 + params.c * scale));
  }
  return (m[2] - m[1]) / (m[1] - m[0]);
}

}  // namespace ifdist::verify
