#include "ifdist/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "ifdist/errors.hpp"

namespace ifdist {
namespace {

// Kronrod abscissae (descending, last is the centre) and weights; the Gauss
// points are the odd-indexed abscissae.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kKronrod[7];
  double gauss = fc * kGauss[3];
  double abs_sum = std::abs(kronrod);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kNodes[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    kronrod += kKronrod[j] * (f1 + f2);
    abs_sum += kKronrod[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kGauss[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  abs_sum *= std::abs(half);
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum;
  return {a, b, kronrod, std::max(std::abs(kronrod - gauss), roundoff)};
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b,
                     const QuadOptions& opts) {
  std::priority_queue<Panel> panels;
  Panel first = gauss_kronrod(f, a, b);
  double total = first.value;
  double error = first.error;
  std::size_t evaluations = 15;
  panels.push(first);

  auto done = [&] {
    return error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
  };
  while (!done()) {
    if (panels.size() >= opts.max_panels) {
      throw NonConvergence("adaptive quadrature: panel budget of " +
                           std::to_string(opts.max_panels) +
                           " exhausted, error estimate " + std::to_string(error));
    }
    if (!std::isfinite(total)) throw NonConvergence("adaptive quadrature: non-finite integral");
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum from scratch so the running updates leave no drift.
  total = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  return {total, error, evaluations};
}

QuadResult integrate_to_infinity(const Integrand& f, double a,
                                 const QuadOptions& opts) {
  auto mapped = [&](double s) {
    const double gap = 1.0 - s;
    return f(a + s / gap) / (gap * gap);
  };
  return integrate(mapped, 0.0, 1.0, opts);
}

QuadResult integrate_real_line(const Integrand& f, const QuadOptions& opts) {
  auto mapped = [&](double s) {
    const double gap = 1.0 - s * s;
    return f(s / gap) * (1.0 + s * s) / (gap * gap);
  };
  return integrate(mapped, -1.0, 1.0, opts);
}

}  // namespace ifdist
