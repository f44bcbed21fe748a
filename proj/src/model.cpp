#include "ifdist/model.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "ifdist/dist_spec.hpp"
#include "ifdist/errors.hpp"
#include "ifdist/format.hpp"

namespace ifdist {

Interpolation Interpolation::finite(double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidParam("p", "must be a finite value >= 0 or inf");
  }
  return Interpolation(value);
}

double Interpolation::value() const {
  if (!value_) throw std::logic_error("interpolation index is infinite");
  return *value_;
}

const char* to_string(Subfamily s) noexcept {
  switch (s) {
    case Subfamily::IF1: return "IF1";
    case Subfamily::IF2: return "IF2";
    case Subfamily::IF3: return "IF3";
    case Subfamily::GeneralIF: return "GeneralIF";
  }
  return "?";
}

IFParams validate(double p, double b, double c, double q, double x0) {
  if (std::isnan(p) || p < 0.0) throw InvalidParam("p", "must be >= 0 or inf");
  if (!std::isfinite(b)) throw InvalidParam("b", "must be finite");
  if (b == 0.0) throw InvalidParam("b", "must be nonzero");
  if (!std::isfinite(c)) throw InvalidParam("c", "must be finite");
  if (!(c > 0.0)) throw InvalidParam("c", "must be positive");
  if (!std::isfinite(q)) throw InvalidParam("q", "must be finite");
  if (!(q > 0.0)) throw InvalidParam("q", "must be positive");
  if (!std::isfinite(x0)) throw InvalidParam("x0", "must be finite");
  if (x0 < 0.0) throw InvalidParam("x0", "must be nonnegative");

  IFParams out;
  out.p = std::isinf(p) ? Interpolation::infinite() : Interpolation::finite(p);
  out.b = b;
  out.c = c;
  out.q = q;
  out.x0 = x0;
  return out;
}

Subfamily classify(const IFParams& params) noexcept {
  if (params.p.is_infinite()) return Subfamily::IF2;
  if (params.p.value() == 0.0) return Subfamily::IF1;
  if (params.b == 1.0) return Subfamily::IF3;
  return Subfamily::GeneralIF;
}

std::string render(const IFParams& params) {
  const std::string p =
      params.p.is_infinite() ? "inf" : format_exact(params.p.value());
  return "if(p=" + p + ",b=" + format_exact(params.b) +
         ",c=" + format_exact(params.c) + ",q=" + format_exact(params.q) +
         ",x0=" + format_exact(params.x0) + ")";
}

IFParams parse_if_spec(const std::string& text) {
  const CallSpec call = parse_call(text);
  if (call.name != "if") throw ParseError("expected if(...), got " + call.name);

  std::map<std::string, double> values;
  for (const auto& [key, raw] : call.args) {
    if (key != "p" && key != "b" && key != "c" && key != "q" && key != "x0") {
      throw ParseError("unknown field '" + key + "' in if(...)");
    }
    if (key == "p" && raw == "inf") {
      values[key] = INFINITY;
      continue;
    }
    const auto v = parse_number(raw);
    if (!v || !std::isfinite(*v)) {
      throw ParseError("field '" + key + "': not a decimal number: " + raw);
    }
    values[key] = *v;
  }
  for (const char* key : {"p", "b", "c", "q", "x0"}) {
    if (!values.count(key)) {
      throw ParseError(std::string("missing field '") + key + "' in if(...)");
    }
  }
  return validate(values["p"], values["b"], values["c"], values["q"],
                  values["x0"]);
}

}  // namespace ifdist
