#pragma once

#include <optional>
#include <string>

namespace ifdist {

/// Interpolation index p in [0, inf]. Infinity is an explicit state so finite-p
/// formulas can never be evaluated at p = inf by accident.
class Interpolation {
 public:
  static Interpolation finite(double value);
  static Interpolation infinite() noexcept { return Interpolation(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  /// The finite value; throws std::logic_error when infinite.
  double value() const;

  friend bool operator==(const Interpolation&, const Interpolation&) = default;

 private:
  Interpolation() = default;
  explicit Interpolation(double v) : value_(v) {}
  std::optional<double> value_;
};

/// The five distribution parameters. Construct through `validate`; the
/// invariants (b != 0, c > 0, q > 0, x0 >= 0) are assumed everywhere else.
struct IFParams {
  Interpolation p = Interpolation::finite(0.0);
  double b = 1.0;   // shape, nonzero
  double c = 1.0;   // scale
  double q = 1.0;   // tail weight
  double x0 = 0.0;  // location; support is [x0, inf)

  friend bool operator==(const IFParams&, const IFParams&) = default;
};

enum class Subfamily { IF1, IF2, IF3, GeneralIF };

const char* to_string(Subfamily s) noexcept;

/// Checks raw values and builds IFParams. `p` may be +infinity; every other
/// value must be finite. Throws InvalidParam naming the first bad field.
IFParams validate(double p, double b, double c, double q, double x0);

/// IF1 iff p == 0; IF2 iff p == inf; IF3 iff 0 < p < inf and b == 1.
Subfamily classify(const IFParams& params) noexcept;

/// Canonical `if(p=..,b=..,c=..,q=..,x0=..)` string with round-trip exact
/// numbers; `parse_if_spec(render(x)) == x`.
std::string render(const IFParams& params);

/// Parses the five-parameter grammar `if(p=<v|inf>,b=<v>,c=<v>,q=<v>,x0=<v>)`.
/// Whitespace-insensitive, any field order, all five fields required.
IFParams parse_if_spec(const std::string& text);

}  // namespace ifdist
