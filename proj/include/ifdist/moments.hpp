#pragma once

#include "ifdist/model.hpp"

namespace ifdist {

enum class MomentMethod { ClosedForm, Quadrature };

const char* to_string(MomentMethod m) noexcept;

/// Outcome of a raw-moment evaluation. Divergence and the absence of a closed
/// form are answers, not errors.
class MomentResult {
 public:
  enum class Kind { Finite, Divergent, NoClosedForm };

  static MomentResult finite(double value, MomentMethod method) {
    return MomentResult(Kind::Finite, value, method);
  }
  static MomentResult divergent() { return MomentResult(Kind::Divergent, 0, {}); }
  static MomentResult no_closed_form() {
    return MomentResult(Kind::NoClosedForm, 0, {});
  }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_divergent() const noexcept { return kind_ == Kind::Divergent; }
  /// Throws std::logic_error unless finite.
  double value() const;
  MomentMethod method() const;

 private:
  MomentResult(Kind k, double v, MomentMethod m) : kind_(k), value_(v), method_(m) {}
  Kind kind_;
  double value_;
  MomentMethod method_;
};

struct MomentOptions {
  bool numeric_fallback = false;  // quadrature for the general family
  double rel_tol = 1e-10;         // quadrature target when it is used
};

/// Whether E[X^r] is finite, for any member of the family.
bool moment_exists(const IFParams& params, unsigned r) noexcept;

/// E[X^r] for p = 0. Throws Unsupported for other p.
MomentResult moment_if1(const IFParams& params, unsigned r);

/// E[X^r] for p = inf. Throws Unsupported for finite p.
MomentResult moment_if2(const IFParams& params, unsigned r);

/// E[X^r] for b = 1 and finite p (p = 0 allowed for cross-checks).
/// Falls back to quadrature if the alternating inner sum is ill-conditioned.
MomentResult moment_if3(const IFParams& params, unsigned r);

/// Dispatches on the subfamily. The general family has no closed form and
/// returns NoClosedForm unless `opts.numeric_fallback` is set.
MomentResult moment(const IFParams& params, unsigned r,
                    const MomentOptions& opts = {});

}  // namespace ifdist
