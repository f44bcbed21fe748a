#include "ifdist/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ifdist/errors.hpp"
#include "ifdist/oracle.hpp"
#include "ifdist/specfun.hpp"

namespace ifdist {
namespace {

using specfun::binomial;
using specfun::ln_gamma;
using specfun::log_beta;

// Above this, (sum |terms|) / |sum| says the IF3 alternating sum has lost too
// many digits to be trusted.
constexpr double kMaxConditionNumber = 1e12;

// Neumaier's compensated sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    comp_ += std::abs(sum_) >= std::abs(v) ? (sum_ - t) + v : (v - t) + sum_;
    sum_ = t;
    abs_ += std::abs(v);
  }
  double value() const { return sum_ + comp_; }
  double abs_total() const { return abs_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
  double abs_ = 0.0;
};

// E[X^r] = sum_i C(r,i) x0^i c^(r-i) E[Z^(r-i)] with Z = (X - x0) / c; the
// standardized moments are supplied per k = r - i by the caller.
template <class StandardizedMoment>
double shift_and_scale(const IFParams& params, unsigned r,
                       StandardizedMoment&& standardized) {
  CompensatedSum sum;
  for (unsigned i = 0; i <= r; ++i) {
    if (params.x0 == 0.0 && i > 0) break;
    const unsigned k = r - i;
    const double scale = std::pow(params.x0, i) * std::pow(params.c, k);
    sum.add(binomial(r, i) * scale * standardized(k));
  }
  return sum.value();
}

double quadrature_moment(const IFParams& params, unsigned r, double rel_tol) {
  QuadOptions opts;
  opts.abs_tol = 1e-300;
  opts.rel_tol = rel_tol;
  const double rr = r;
  return oracle::quad_expectation_point(
             params,
             [rr](const SupportPoint& pt) { return std::pow(pt.x, rr); }, opts)
      .value;
}

}  // namespace

const char* to_string(MomentMethod m) noexcept {
  return m == MomentMethod::ClosedForm ? "closed-form" : "quadrature";
}

double MomentResult::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("moment is not finite");
  return value_;
}

MomentMethod MomentResult::method() const {
  if (kind_ != Kind::Finite) throw std::logic_error("moment is not finite");
  return method_;
}

bool moment_exists(const IFParams& params, unsigned r) noexcept {
  const double rr = r;
  const double b = params.b;
  const double q = params.q;
  if (params.p.is_infinite()) return b < 0 || rr < b * q;
  if (b > 0) return rr < b * q;
  // Upper tail for b < 0 decays like z^(b (p + 1) - 1).
  return rr < -b * (params.p.value() + 1.0);
}

MomentResult moment_if1(const IFParams& params, unsigned r) {
  if (params.p.is_infinite() || params.p.value() != 0.0) {
    throw Unsupported("moment_if1 requires p = 0");
  }
  if (!moment_exists(params, r)) return MomentResult::divergent();
  const double b = params.b;
  const double q = params.q;
  const double lg_q = ln_gamma(q);
  const double value = shift_and_scale(params, r, [&](unsigned k) {
    if (k == 0) return 1.0;
    const double s = k / b;
    return std::exp(ln_gamma(q - s) + ln_gamma(1.0 + s) - lg_q);
  });
  return MomentResult::finite(value, MomentMethod::ClosedForm);
}

MomentResult moment_if2(const IFParams& params, unsigned r) {
  if (params.p.is_finite()) throw Unsupported("moment_if2 requires p = inf");
  if (!moment_exists(params, r)) return MomentResult::divergent();
  const double bq = params.b * params.q;
  const double value = shift_and_scale(params, r, [&](unsigned k) {
    if (k == 0) return 1.0;
    return std::exp(ln_gamma(1.0 - k / bq));
  });
  return MomentResult::finite(value, MomentMethod::ClosedForm);
}

MomentResult moment_if3(const IFParams& params, unsigned r) {
  if (params.p.is_infinite() || params.b != 1.0) {
    throw Unsupported("moment_if3 requires b = 1 and finite p");
  }
  const double q = params.q;
  if (!(r < q)) return MomentResult::divergent();
  const double p = params.p.value();
  const double lp1 = std::log1p(p);

  bool ill_conditioned = false;
  const double value = shift_and_scale(params, r, [&](unsigned k) {
    if (k == 0) return 1.0;
    // (p+1)^(1-k/q) sum_j C(k,j) (-1)^j B(1 - (k-j)/q, p+1), each term in
    // log space with the sign carried separately.
    CompensatedSum inner;
    for (unsigned j = 0; j <= k; ++j) {
      const double log_mag = std::log(binomial(k, j)) +
                             log_beta(1.0 - (k - j) / q, p + 1.0) +
                             (1.0 - k / q) * lp1;
      const double term = std::exp(log_mag);
      inner.add(j % 2 == 0 ? term : -term);
    }
    const double v = inner.value();
    if (inner.abs_total() > kMaxConditionNumber * std::abs(v)) ill_conditioned = true;
    return v;
  });
  if (ill_conditioned) {
    return MomentResult::finite(quadrature_moment(params, r, 1e-10),
                                MomentMethod::Quadrature);
  }
  return MomentResult::finite(value, MomentMethod::ClosedForm);
}

MomentResult moment(const IFParams& params, unsigned r, const MomentOptions& opts) {
  switch (classify(params)) {
    case Subfamily::IF1: return moment_if1(params, r);
    case Subfamily::IF2: return moment_if2(params, r);
    case Subfamily::IF3: return moment_if3(params, r);
    case Subfamily::GeneralIF: break;
  }
  if (!opts.numeric_fallback) return MomentResult::no_closed_form();
  if (!moment_exists(params, r)) return MomentResult::divergent();
  return MomentResult::finite(quadrature_moment(params, r, opts.rel_tol),
                              MomentMethod::Quadrature);
}

}  // namespace ifdist
