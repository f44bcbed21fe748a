#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ifdist/density.hpp"
#include "ifdist/dist_spec.hpp"
#include "ifdist/entropy.hpp"
#include "ifdist/errors.hpp"
#include "ifdist/format.hpp"
#include "ifdist/moments.hpp"
#include "ifdist/registry.hpp"
#include "ifdist/verify.hpp"

namespace {

using ifdist::format_number;
using nlohmann::json;

constexpr int kExitFailedChecks = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergence = 3;

json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

int cmd_eval(const std::string& dist, const std::string& fn, double at) {
  const auto params = ifdist::parse_dist(dist);
  double v = 0.0;
  if (fn == "pdf") v = ifdist::pdf(params, at);
  else if (fn == "logpdf") v = ifdist::log_pdf(params, at);
  else if (fn == "cdf") v = ifdist::cdf(params, at);
  else v = ifdist::quantile(params, at);
  std::cout << format_number(v) << '\n';
  return 0;
}

int cmd_moment(const std::string& dist, unsigned r, bool fallback) {
  const auto params = ifdist::parse_dist(dist);
  ifdist::MomentOptions opts;
  opts.numeric_fallback = fallback;
  const auto m = ifdist::moment(params, r, opts);
  if (m.is_finite()) {
    std::cout << "finite " << format_number(m.value()) << ' '
              << ifdist::to_string(m.method()) << '\n';
  } else if (m.is_divergent()) {
    std::cout << "divergent\n";
  } else {
    std::cout << "no-closed-form\n";
  }
  return 0;
}

int cmd_entropy(const std::string& dist) {
  std::cout << format_number(ifdist::entropy(ifdist::parse_dist(dist)).value) << '\n';
  return 0;
}

int cmd_sample(const std::string& dist, std::size_t n, std::uint64_t seed) {
  const auto params = ifdist::parse_dist(dist);
  std::string out;
  for (double x : ifdist::sample(params, seed, n)) {
    out += format_number(x);
    out += '\n';
  }
  std::cout << out;
  return 0;
}

int cmd_grid(const std::string& dist, const std::string& fn, double from, double to,
             std::size_t points, const std::string& format) {
  const auto params = ifdist::parse_dist(dist);
  if (!(from < to)) throw ifdist::DomainError("grid: --from must be less than --to");
  if (points < 2) throw ifdist::DomainError("grid: --points must be at least 2");
  const double step = (to - from) / static_cast<double>(points - 1);
  std::vector<std::pair<double, double>> rows;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = i + 1 == points ? to : from + step * static_cast<double>(i);
    rows.emplace_back(x, fn == "pdf" ? ifdist::pdf(params, x) : ifdist::cdf(params, x));
  }
  if (format == "json") {
    json doc = json::array();
    for (const auto& [x, v] : rows) doc.push_back({{"x", number(x)}, {"value", number(v)}});
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "x,value\n";
    for (const auto& [x, v] : rows) {
      std::cout << format_number(x) << ',' << format_number(v) << '\n';
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite_name, const std::string& format) {
  const auto suite = ifdist::verify::parse_suite(suite_name);
  if (!suite) throw ifdist::ParseError("unknown suite: " + suite_name);
  const auto report = ifdist::verify::run_suite(*suite);
  if (format == "json") {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"id", c.id},
                        {"description", c.description},
                        {"expected", number(c.expected)},
                        {"actual", number(c.actual)},
                        {"tolerance", c.tolerance},
                        {"mode", c.relative ? "relative" : "absolute"},
                        {"pass", c.pass}});
    }
    json doc = {{"checks", checks},
                {"summary",
                 {{"total", report.summary.total},
                  {"passed", report.summary.passed},
                  {"failed", report.summary.failed}}}};
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.description
                << "  expected=" << format_number(c.expected)
                << " actual=" << format_number(c.actual)
                << " tol=" << format_number(c.tolerance)
                << (c.relative ? " (rel)" : "") << '\n';
    }
    std::cout << report.summary.passed << '/' << report.summary.total << " passed, "
              << report.summary.failed << " failed\n";
  }
  return report.summary.failed == 0 ? 0 : kExitFailedChecks;
}

int cmd_registry(bool list, const std::string& show) {
  if (!show.empty()) {
    const auto& nc = ifdist::registry::find(show);
    std::cout << nc.title << " (" << nc.name << ")\n";
    std::cout << "free parameters:";
    for (const auto& fp : nc.free_params) std::cout << ' ' << fp.symbol << ' ' << fp.domain << ';';
    std::cout << "\nmapping (p, b, c, q, x0): " << nc.mapping_text << '\n';
    std::cout << "mean: " << nc.mean_text;
    if (!nc.mean_condition_text.empty()) std::cout << "  if " << nc.mean_condition_text;
    std::cout << "\nentropy: " << nc.entropy_text << '\n';
    const auto points = ifdist::verify::case_points(nc.name);
    if (!points.empty()) {
      std::cout << "constraints:\n";
      for (const auto& c : nc.constraints(points.front())) {
        std::cout << "  " << c.description << '\n';
      }
    }
    return 0;
  }
  if (list) {
    for (const auto& name : ifdist::registry::list_cases()) std::cout << name << '\n';
    return 0;
  }
  throw ifdist::ParseError("registry: pass --list or --show <name>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpolating-family size distributions: densities, moments, entropy"};
  app.require_subcommand(1);

  std::string dist, fn = "pdf", format = "text", suite = "all", show;
  double at = 0.0, from = 0.0, to = 1.0;
  unsigned r = 1;
  std::size_t n = 0, points = 101;
  std::uint64_t seed = 0;
  bool fallback = false, list = false;

  auto* eval = app.add_subcommand("eval", "Evaluate pdf, logpdf, cdf or quantile");
  eval->add_option("--dist", dist, "Distribution spec")->required();
  eval->add_option("--fn", fn)->check(CLI::IsMember({"pdf", "logpdf", "cdf", "quantile"}))
      ->required();
  eval->add_option("--at", at)->required();

  auto* mom = app.add_subcommand("moment", "Raw moment E[X^r]");
  mom->add_option("--dist", dist)->required();
  mom->add_option("--r", r)->required();
  mom->add_flag("--fallback", fallback, "Use quadrature where no closed form exists");

  auto* ent = app.add_subcommand("entropy", "Differential entropy in nats");
  ent->add_option("--dist", dist)->required();

  auto* smp = app.add_subcommand("sample", "Draw seeded samples, one per line");
  smp->add_option("--dist", dist)->required();
  smp->add_option("--n", n)->required();
  smp->add_option("--seed", seed);

  auto* grd = app.add_subcommand("grid", "Tabulate pdf or cdf on an even grid");
  grd->add_option("--dist", dist)->required();
  grd->add_option("--fn", fn)->check(CLI::IsMember({"pdf", "cdf"}));
  grd->add_option("--from", from)->required();
  grd->add_option("--to", to)->required();
  grd->add_option("--points", points);
  grd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* ver = app.add_subcommand("verify", "Run the verification checks");
  ver->add_option("--suite", suite)
      ->check(CLI::IsMember({"specfun", "density", "moments", "entropy", "registry", "all"}));
  ver->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* reg = app.add_subcommand("registry", "List or describe named cases");
  reg->add_flag("--list", list);
  reg->add_option("--show", show);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(dist, fn, at);
    if (mom->parsed()) return cmd_moment(dist, r, fallback);
    if (ent->parsed()) return cmd_entropy(dist);
    if (smp->parsed()) return cmd_sample(dist, n, seed);
    if (grd->parsed()) {
      return cmd_grid(dist, fn, from, to, points, format == "text" ? "csv" : format);
    }
    if (ver->parsed()) return cmd_verify(suite, format);
    if (reg->parsed()) return cmd_registry(list, show);
  } catch (const ifdist::NonConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
