#include "ifdist/registry.hpp"

#include <cmath>
#include <numbers>

#include "ifdist/errors.hpp"
#include "ifdist/logspace.hpp"
#include "ifdist/specfun.hpp"

namespace ifdist::registry {
namespace {

using specfun::beta;
using specfun::euler_mascheroni;
using specfun::gamma;

constexpr double kInf = INFINITY;

// H_{q-1} for real q > 0.
double h_qm1(double q) { return specfun::digamma(q) + euler_mascheroni(); }
double h(double m) { return specfun::harmonic(m); }

FreeParam positive(std::string symbol) {
  return {std::move(symbol), "> 0", [](double v) { return v > 0.0; }};
}
FreeParam negative(std::string symbol) {
  return {std::move(symbol), "< 0", [](double v) { return v < 0.0; }};
}
FreeParam nonnegative(std::string symbol) {
  return {std::move(symbol), ">= 0", [](double v) { return v >= 0.0; }};
}
FreeParam at_least_one(std::string symbol) {
  return {std::move(symbol), ">= 1", [](double v) { return v >= 1.0; }};
}

double at(const FreeParams& f, const char* symbol) { return f.find(symbol)->second; }

// Functionals of the support point used in the constraint columns.
double ln_z(const SupportPoint& pt) { return pt.log_z; }

std::vector<NamedCase> build_catalog() {
  std::vector<NamedCase> rows;

  // ---- power-law members (p = 0) ----------------------------------------
  rows.push_back(NamedCase{
      "pareto4", "Pareto IV",
      {positive("gamma"), positive("c"), positive("q"), nonnegative("x0")},
      "(0, 1/gamma, c, q, x0)",
      "x0 + c Gamma(q-gamma) Gamma(1+gamma) / Gamma(q)", "q > gamma",
      "(1-gamma) H_{q-1} + (q+1)/q - ln(q/(c gamma))",
      [](const FreeParams& f) {
        return validate(0, 1.0 / at(f, "gamma"), at(f, "c"), at(f, "q"), at(f, "x0"));
      },
      [](const FreeParams& f) { return at(f, "q") > at(f, "gamma"); },
      [](const FreeParams& f) {
        const double g = at(f, "gamma"), c = at(f, "c"), q = at(f, "q");
        return at(f, "x0") + c * gamma(q - g) * gamma(1 + g) / gamma(q);
      },
      [](const FreeParams& f) {
        const double g = at(f, "gamma"), c = at(f, "c"), q = at(f, "q");
        return (1 - g) * h_qm1(q) + (q + 1) / q - std::log(q / (c * g));
      },
      [](const FreeParams& f) {
        const double g = at(f, "gamma"), q = at(f, "q");
        return std::vector<TableConstraint>{
            {"E[ln((x-x0)/c)] = -gamma H_{q-1}", -g * h_qm1(q), ln_z},
            {"E[ln(1+((x-x0)/c)^(1/gamma))] = 1/q", 1 / q,
             [g](const SupportPoint& pt) { return logspace::softplus(pt.log_z / g); }},
        };
      }});

  rows.push_back(NamedCase{
      "lindsay_burr3", "Lindsay-Burr III",
      {negative("b"), positive("c"), positive("q"), nonnegative("x0")},
      "(0, b, c, q, x0)",
      "x0 + c Gamma(q-1/b) Gamma(1+1/b) / Gamma(q)", "b < -1",
      "(b-1)/b H_{q-1} + (q+1)/q - ln(|b| q/c)",
      [](const FreeParams& f) {
        return validate(0, at(f, "b"), at(f, "c"), at(f, "q"), at(f, "x0"));
      },
      [](const FreeParams& f) { return at(f, "b") < -1; },
      [](const FreeParams& f) {
        const double b = at(f, "b"), c = at(f, "c"), q = at(f, "q");
        return at(f, "x0") + c * gamma(q - 1 / b) * gamma(1 + 1 / b) / gamma(q);
      },
      [](const FreeParams& f) {
        const double b = at(f, "b"), c = at(f, "c"), q = at(f, "q");
        return (b - 1) / b * h_qm1(q) + (q + 1) / q - std::log(std::abs(b) * q / c);
      },
      [](const FreeParams& f) {
        const double b = at(f, "b"), q = at(f, "q");
        return std::vector<TableConstraint>{
            {"E[ln((x-x0)/c)] = -H_{q-1}/b", -h_qm1(q) / b, ln_z},
            {"E[ln(1+((x-x0)/c)^b)] = 1/q", 1 / q,
             [b](const SupportPoint& pt) { return logspace::softplus(b * pt.log_z); }},
        };
      }});

  rows.push_back(NamedCase{
      "pareto2", "Pareto II",
      {positive("c"), positive("q"), nonnegative("x0")},
      "(0, 1, c, q, x0)", "x0 + c/(q-1)", "q > 1", "(q+1)/q - ln(q/c)",
      [](const FreeParams& f) {
        return validate(0, 1, at(f, "c"), at(f, "q"), at(f, "x0"));
      },
      [](const FreeParams& f) { return at(f, "q") > 1; },
      [](const FreeParams& f) { return at(f, "x0") + at(f, "c") / (at(f, "q") - 1); },
      [](const FreeParams& f) {
        const double q = at(f, "q");
        return (q + 1) / q - std::log(q / at(f, "c"));
      },
      [](const FreeParams& f) {
        const double q = at(f, "q");
        return std::vector<TableConstraint>{
            {"E[ln((x-x0)/c)] = -H_{q-1}", -h_qm1(q), ln_z},
            {"E[ln(1+(x-x0)/c)] = 1/q", 1 / q,
             [](const SupportPoint& pt) { return std::log1p(pt.z); }},
        };
      }});

  rows.push_back(NamedCase{
      "pareto3", "Pareto III",
      {positive("gamma"), positive("c"), nonnegative("x0")},
      "(0, 1/gamma, c, 1, x0)", "x0 + c Gamma(1-gamma) Gamma(1+gamma)",
      "gamma < 1", "2 + ln(c gamma)",
      [](const FreeParams& f) {
        return validate(0, 1.0 / at(f, "gamma"), at(f, "c"), 1, at(f, "x0"));
      },
      [](const FreeParams& f) { return at(f, "gamma") < 1; },
      [](const FreeParams& f) {
        const double g = at(f, "gamma");
        return at(f, "x0") + at(f, "c") * gamma(1 - g) * gamma(1 + g);
      },
      [](const FreeParams& f) { return 2 + std::log(at(f, "c") * at(f, "gamma")); },
      [](const FreeParams& f) {
        const double g = at(f, "gamma");
        return std::vector<TableConstraint>{
            {"E[ln((x-x0)/c)] = 0", 0.0, ln_z},
            {"E[ln(1+((x-x0)/c)^(1/gamma))] = 1", 1.0,
             [g](const SupportPoint& pt) { return logspace::softplus(pt.log_z / g); }},
        };
      }});

  rows.push_back(NamedCase{
      "tadikamalla_burr12", "Tadikamalla-Burr XII",
      {positive("b"), positive("c"), positive("q")},
      "(0, b, c, q, 0)", "c Gamma(q-1/b) Gamma(1+1/b) / Gamma(q)", "b q > 1",
      "(b-1)/b H_{q-1} + (q+1)/q - ln(|b| q/c)",
      [](const FreeParams& f) {
        return validate(0, at(f, "b"), at(f, "c"), at(f, "q"), 0);
      },
      [](const FreeParams& f) { return at(f, "b") * at(f, "q") > 1; },
      [](const FreeParams& f) {
        const double b = at(f, "b"), q = at(f, "q");
        return at(f, "c") * gamma(q - 1 / b) * gamma(1 + 1 / b) / gamma(q);
      },
      [](const FreeParams& f) {
        const double b = at(f, "b"), c = at(f, "c"), q = at(f, "q");
        return (b - 1) / b * h_qm1(q) + (q + 1) / q - std::log(std::abs(b) * q / c);
      },
      [](const FreeParams& f) {
        const double b = at(f, "b"), q = at(f, "q");
        return std::vector<TableConstraint>{
            {"E[ln(x/c)] = -H_{q-1}/b", -h_qm1(q) / b, ln_z},
            {"E[ln(1+(x/c)^b)] = 1/q", 1 / q,
             [b](const SupportPoint& pt) { return logspace::softplus(b * pt.log_z); }},
        };
      }});

  rows.push_back(NamedCase{
      "fisk", "Fisk",
      {positive("b"), positive("c")},
      "(0, b, c, 1, 0)", "c Gamma(1-1/b) Gamma(1+1/b)", "b > 1", "2 - ln(b/c)",
      [](const FreeParams& f) { return validate(0, at(f, "b"), at(f, "c"), 1, 0); },
      [](const FreeParams& f) { return at(f, "b") > 1; },
      [](const FreeParams& f) {
        const double b = at(f, "b");
        return at(f, "c") * gamma(1 - 1 / b) * gamma(1 + 1 / b);
      },
      [](const FreeParams& f) { return 2 - std::log(at(f, "b") / at(f, "c")); },
      [](const FreeParams& f) {
        const double b = at(f, "b");
        return std::vector<TableConstraint>{
            {"E[ln(x/c)] = 0", 0.0, ln_z},
            {"E[ln(1+(x/c)^b)] = 1", 1.0,
             [b](const SupportPoint& pt) { return logspace::softplus(b * pt.log_z); }},
        };
      }});

  rows.push_back(NamedCase{
      "lomax", "Lomax",
      {positive("c"), positive("q")},
      "(0, 1, c, q, 0)", "c/(q-1)", "q > 1", "(q+1)/q - ln(q/c)",
      [](const FreeParams& f) { return validate(0, 1, at(f, "c"), at(f, "q"), 0); },
      [](const FreeParams& f) { return at(f, "q") > 1; },
      [](const FreeParams& f) { return at(f, "c") / (at(f, "q") - 1); },
      [](const FreeParams& f) {
        const double q = at(f, "q");
        return (q + 1) / q - std::log(q / at(f, "c"));
      },
      [](const FreeParams& f) {
        const double q = at(f, "q");
        return std::vector<TableConstraint>{
            {"E[ln(x/c)] = -H_{q-1}", -h_qm1(q), ln_z},
            {"E[ln(1+x/c)] = 1/q", 1 / q,
             [](const SupportPoint& pt) { return std::log1p(pt.z); }},
        };
      }});

  // c equals x0 here, so x/c - 1 is the standardized excess.
  rows.push_back(NamedCase{
      "pareto1", "Pareto I",
      {positive("q"), positive("x0")},
      "(0, 1, x0, q, x0)", "q/(q-1) x0", "q > 1", "(q+1)/q - ln(q/x0)",
      [](const FreeParams& f) {
        return validate(0, 1, at(f, "x0"), at(f, "q"), at(f, "x0"));
      },
      [](const FreeParams& f) { return at(f, "q") > 1; },
      [](const FreeParams& f) {
        const double q = at(f, "q");
        return q / (q - 1) * at(f, "x0");
      },
      [](const FreeParams& f) {
        const double q = at(f, "q");
        return (q + 1) / q - std::log(q / at(f, "x0"));
      },
      [](const FreeParams& f) {
        const double q = at(f, "q");
        return std::vector<TableConstraint>{
            {"E[ln(x/c-1)] = -H_{q-1}", -h_qm1(q), ln_z},
            {"E[ln(x/x0)] = 1/q", 1 / q,
             [](const SupportPoint& pt) { return std::log1p(pt.z); }},
        };
      }});

  rows.push_back(NamedCase{
      "burr12", "Burr XII",
      {positive("b"), positive("q")},
      "(0, b, 1, q, 0)", "Gamma(q-1/b) Gamma(1+1/b) / Gamma(q)", "b q > 1",
      "(b-1)/b H_{q-1} + (q+1)/q - ln(b q)",
      [](const FreeParams& f) { return validate(0, at(f, "b"), 1, at(f, "q"), 0); },
      [](const FreeParams& f) { return at(f, "b") * at(f, "q") > 1; },
      [](const FreeParams& f) {
        const double b = at(f, "b"), q = at(f, "q");
        return gamma(q - 1 / b) * gamma(1 + 1 / b) / gamma(q);
      },
      [](const FreeParams& f) {
        const double b = at(f, "b"), q = at(f, "q");
        return (b - 1) / b * h_qm1(q) + (q + 1) / q - std::log(b * q);
      },
      [](const FreeParams& f) {
        const double b = at(f, "b"), q = at(f, "q");
        return std::vector<TableConstraint>{
            {"E[ln(x)] = -H_{q-1}/b", -h_qm1(q) / b, ln_z},
            {"E[ln(1+x^b)] = 1/q", 1 / q,
             [b](const SupportPoint& pt) { return logspace::softplus(b * pt.log_z); }},
        };
      }});

  // ---- exponential cut-off members (p = inf) ----------------------------
  rows.push_back(NamedCase{
      "weibull", "Weibull",
      {positive("c"), positive("q"), nonnegative("x0")},
      "(inf, -1, c, q, x0)", "x0 + c Gamma(1+1/q)", "",
      "(q-1)/q gamma_E + 1 - ln(q/c)",
      [](const FreeParams& f) {
        return validate(kInf, -1, at(f, "c"), at(f, "q"), at(f, "x0"));
      },
      [](const FreeParams&) { return true; },
      [](const FreeParams& f) {
        return at(f, "x0") + at(f, "c") * gamma(1 + 1 / at(f, "q"));
      },
      [](const FreeParams& f) {
        const double q = at(f, "q");
        return (q - 1) / q * euler_mascheroni() + 1 - std::log(q / at(f, "c"));
      },
      [](const FreeParams& f) {
        const double c = at(f, "c"), q = at(f, "q");
        return std::vector<TableConstraint>{
            {"E[ln((x-x0)/c)] = -gamma_E/q", -euler_mascheroni() / q, ln_z},
            {"E[(x-x0)^q] = c^q", std::pow(c, q),
             [c, q](const SupportPoint& pt) {
               return std::exp(q * (std::log(c) + pt.log_z));
             }},
        };
      }});

  rows.push_back(NamedCase{
      "frechet", "Frechet",
      {positive("c"), positive("q"), nonnegative("x0")},
      "(inf, 1, c, q, x0)", "x0 + c Gamma(1-1/q)", "q > 1",
      "(q+1)/q gamma_E + 1 - ln(q/c)",
      [](const FreeParams& f) {
        return validate(kInf, 1, at(f, "c"), at(f, "q"), at(f, "x0"));
      },
      [](const FreeParams& f) { return at(f, "q") > 1; },
      [](const FreeParams& f) {
        return at(f, "x0") + at(f, "c") * gamma(1 - 1 / at(f, "q"));
      },
      [](const FreeParams& f) {
        const double q = at(f, "q");
        return (q + 1) / q * euler_mascheroni() + 1 - std::log(q / at(f, "c"));
      },
      [](const FreeParams& f) {
        const double c = at(f, "c"), q = at(f, "q");
        return std::vector<TableConstraint>{
            {"E[ln((x-x0)/c)] = gamma_E/q", euler_mascheroni() / q, ln_z},
            {"E[(x-x0)^(-q)] = c^(-q)", std::pow(c, -q),
             [c, q](const SupportPoint& pt) {
               return std::exp(-q * (std::log(c) + pt.log_z));
             }},
        };
      }});

  rows.push_back(NamedCase{
      "gumbel2", "Gumbel II",
      {positive("c"), positive("q")},
      "(inf, 1, c, q, 0)", "c Gamma(1-1/q)", "q > 1",
      "(q+1)/q gamma_E + 1 - ln(q/c)",
      [](const FreeParams& f) { return validate(kInf, 1, at(f, "c"), at(f, "q"), 0); },
      [](const FreeParams& f) { return at(f, "q") > 1; },
      [](const FreeParams& f) { return at(f, "c") * gamma(1 - 1 / at(f, "q")); },
      [](const FreeParams& f) {
        const double q = at(f, "q");
        return (q + 1) / q * euler_mascheroni() + 1 - std::log(q / at(f, "c"));
      },
      [](const FreeParams& f) {
        const double c = at(f, "c"), q = at(f, "q");
        return std::vector<TableConstraint>{
            {"E[ln(x/c)] = gamma_E/q", euler_mascheroni() / q, ln_z},
            {"E[x^(-q)] = c^(-q)", std::pow(c, -q),
             [q](const SupportPoint& pt) { return std::pow(pt.x, -q); }},
        };
      }});

  rows.push_back(NamedCase{
      "rayleigh", "Rayleigh",
      {positive("c")},
      "(inf, -1, c, 2, 0)", "c/sqrt(2) sqrt(pi/2)", "",
      "gamma_E/2 + ln(c/2) + 1",
      [](const FreeParams& f) { return validate(kInf, -1, at(f, "c"), 2, 0); },
      [](const FreeParams&) { return true; },
      [](const FreeParams& f) {
        return at(f, "c") / std::numbers::sqrt2 * std::sqrt(std::numbers::pi / 2);
      },
      [](const FreeParams& f) {
        return euler_mascheroni() / 2 + std::log(at(f, "c") / 2) + 1;
      },
      [](const FreeParams& f) {
        const double c = at(f, "c");
        return std::vector<TableConstraint>{
            {"E[ln(x/c)] = -gamma_E/2", -euler_mascheroni() / 2, ln_z},
            {"E[x^2] = c^2", c * c,
             [](const SupportPoint& pt) { return pt.x * pt.x; }},
        };
      }});

  rows.push_back(NamedCase{
      "exponential", "Exponential",
      {positive("c")},
      "(inf, -1, c, 1, 0)", "c", "", "ln(c) + 1",
      [](const FreeParams& f) { return validate(kInf, -1, at(f, "c"), 1, 0); },
      [](const FreeParams&) { return true; },
      [](const FreeParams& f) { return at(f, "c"); },
      [](const FreeParams& f) { return std::log(at(f, "c")) + 1; },
      [](const FreeParams& f) {
        return std::vector<TableConstraint>{
            {"E[x] = c", at(f, "c"), [](const SupportPoint& pt) { return pt.x; }},
        };
      }});

  // ---- b = 1 members with finite p = m - 1 -------------------------------
  // The second beta term of this mean is B(1, m) = 1/m; the form with
  // B(1+1/q, m) that circulates in tables disagrees with direct quadrature.
  rows.push_back(NamedCase{
      "generalized_lomax", "Generalized Lomax",
      {at_least_one("m"), positive("c"), positive("q")},
      "(m-1, 1, c, q, 0)", "c m^(1-1/q) (B(1-1/q, m) - B(1, m))", "q > 1",
      "(q+1)/q (H_m - ln m) + (m-1)/m - ln(q/c)",
      [](const FreeParams& f) {
        return validate(at(f, "m") - 1, 1, at(f, "c"), at(f, "q"), 0);
      },
      [](const FreeParams& f) { return at(f, "q") > 1; },
      [](const FreeParams& f) {
        const double m = at(f, "m"), q = at(f, "q");
        return at(f, "c") * std::pow(m, 1 - 1 / q) * (beta(1 - 1 / q, m) - beta(1, m));
      },
      [](const FreeParams& f) {
        const double m = at(f, "m"), q = at(f, "q");
        return (q + 1) / q * (h(m) - std::log(m)) + (m - 1) / m -
               std::log(q / at(f, "c"));
      },
      [](const FreeParams& f) {
        const double m = at(f, "m"), q = at(f, "q");
        const double lm = std::log(m);
        return std::vector<TableConstraint>{
            {"E[ln(m^(-1/q)+x/c)] = (H_m-ln m)/q", (h(m) - lm) / q,
             [lm, q](const SupportPoint& pt) {
               return logspace::logaddexp(-lm / q, pt.log_z);
             }},
            {"E[ln(1-(1+m^(1/q) x/c)^(-q))] = -1/m", -1 / m,
             [lm, q](const SupportPoint& pt) {
               return logspace::log_one_minus_pow(pt.log_z + lm / q, q);
             }},
        };
      }});

  // Location x0 = c m^(-1/q) is derived, not free. With it,
  // 1 + m^(1/q) (x - x0)/c = m^(1/q) x/c, so the second constraint reads
  // ln(1 - m^-1 (x/c)^-q).
  rows.push_back(NamedCase{
      "stoppa", "Stoppa",
      {at_least_one("m"), positive("c"), positive("q")},
      "(m-1, 1, c, q, c m^(-1/q))", "x0 m B(1-1/q, m)", "q > 1",
      "(q+1)/q (H_m - ln m) + (m-1)/m - ln(q/c)",
      [](const FreeParams& f) {
        const double m = at(f, "m"), c = at(f, "c"), q = at(f, "q");
        return validate(m - 1, 1, c, q, c * std::pow(m, -1 / q));
      },
      [](const FreeParams& f) { return at(f, "q") > 1; },
      [](const FreeParams& f) {
        const double m = at(f, "m"), c = at(f, "c"), q = at(f, "q");
        const double x0 = c * std::pow(m, -1 / q);
        return x0 * m * beta(1 - 1 / q, m);
      },
      [](const FreeParams& f) {
        const double m = at(f, "m"), q = at(f, "q");
        return (q + 1) / q * (h(m) - std::log(m)) + (m - 1) / m -
               std::log(q / at(f, "c"));
      },
      [](const FreeParams& f) {
        const double m = at(f, "m"), c = at(f, "c"), q = at(f, "q");
        const double lm = std::log(m);
        return std::vector<TableConstraint>{
            {"E[ln(x/c)] = (H_m-ln m)/q", (h(m) - lm) / q,
             [c](const SupportPoint& pt) { return std::log(pt.x / c); }},
            {"E[ln(1-m^(-1) (x/c)^(-q))] = -1/m", -1 / m,
             [c, q, lm](const SupportPoint& pt) {
               return logspace::log1mexp(-lm - q * std::log(pt.x / c));
             }},
        };
      }});

  return rows;
}

void check_free_params(const NamedCase& row, const FreeParams& free) {
  for (const auto& [symbol, value] : free) {
    bool known = false;
    for (const auto& fp : row.free_params) known = known || fp.symbol == symbol;
    if (!known) throw InvalidParam(symbol, "not a parameter of " + row.name);
  }
  for (const auto& fp : row.free_params) {
    const auto it = free.find(fp.symbol);
    if (it == free.end()) throw InvalidParam(fp.symbol, "missing");
    if (!std::isfinite(it->second) || !fp.admits(it->second)) {
      throw InvalidParam(fp.symbol, "must be " + fp.domain);
    }
  }
}

const NamedCase& checked(std::string_view name, const FreeParams& free) {
  const NamedCase& row = find(name);
  check_free_params(row, free);
  return row;
}

}  // namespace

const std::vector<NamedCase>& catalog() {
  static const std::vector<NamedCase> rows = build_catalog();
  return rows;
}

const NamedCase& find(std::string_view name) {
  for (const auto& row : catalog()) {
    if (row.name == name) return row;
  }
  throw UnknownCase(std::string(name));
}

std::vector<std::string> list_cases() {
  std::vector<std::string> names;
  for (const auto& row : catalog()) names.push_back(row.name);
  return names;
}

IFParams resolve(std::string_view name, const FreeParams& free) {
  return checked(name, free).mapping(free);
}

MomentResult table_mean(std::string_view name, const FreeParams& free) {
  const NamedCase& row = checked(name, free);
  if (!row.mean_exists(free)) return MomentResult::divergent();
  return MomentResult::finite(row.mean(free), MomentMethod::ClosedForm);
}

double table_entropy(std::string_view name, const FreeParams& free) {
  return checked(name, free).entropy(free);
}

std::vector<TableConstraint> table_constraints(std::string_view name,
                                               const FreeParams& free) {
  return checked(name, free).constraints(free);
}

}  // namespace ifdist::registry
