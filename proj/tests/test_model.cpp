#include <catch_amalgamated.hpp>

#include <limits>

#include "ifdist/dist_spec.hpp"
#include "ifdist/errors.hpp"
#include "ifdist/model.hpp"

using namespace ifdist;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string invalid_field(double p, double b, double c, double q, double x0) {
  try {
    validate(p, b, c, q, x0);
  } catch (const InvalidParam& e) {
    return e.field();
  }
  return "";
}
}  // namespace

TEST_CASE("validate accepts valid parameter sets") {
  const auto a = validate(0, 2, 1, 3, 0);
  CHECK(a.p.is_finite());
  CHECK(a.p.value() == 0.0);
  CHECK(a.b == 2);
  const auto e = validate(kInf, -1, 1, 1, 0);
  CHECK(e.p.is_infinite());
  CHECK(classify(e) == Subfamily::IF2);
}

TEST_CASE("validate rejects each invalid field") {
  try {
    validate(0, 0, 1, 1, 0);
    FAIL("expected InvalidParam");
  } catch (const InvalidParam& e) {
    CHECK(e.field() == "b");
    CHECK(e.reason() == "must be nonzero");
  }
  CHECK(invalid_field(-1, 1, 1, 1, 0) == "p");
  CHECK(invalid_field(std::nan(""), 1, 1, 1, 0) == "p");
  CHECK(invalid_field(0, 1, 0, 1, 0) == "c");
  CHECK(invalid_field(0, 1, 1, -2, 0) == "q");
  CHECK(invalid_field(0, 1, 1, 1, -0.5) == "x0");
  CHECK(invalid_field(0, kInf, 1, 1, 0) == "b");
  CHECK(invalid_field(0, 1, kInf, 1, 0) == "c");
}

TEST_CASE("classify") {
  CHECK(classify(validate(0, 2, 1, 1, 0)) == Subfamily::IF1);
  CHECK(classify(validate(0, 1, 1, 1, 0)) == Subfamily::IF1);
  CHECK(classify(validate(kInf, 1, 1, 2, 0)) == Subfamily::IF2);
  CHECK(classify(validate(3, 1, 2, 4, 0)) == Subfamily::IF3);
  CHECK(classify(validate(3, 2, 2, 4, 0)) == Subfamily::GeneralIF);
  CHECK(std::string(to_string(Subfamily::GeneralIF)) == "GeneralIF");
}

TEST_CASE("render and parse round-trip") {
  const IFParams cases[] = {
      validate(0, 2, 1, 3, 0),
      validate(kInf, -1, 2.5, 1, 0),
      validate(0.1, 1, 1.0 / 3.0, 7.25, 0.7071067811865476),
      validate(1e-300, -1e10, 1e300, 3e-7, 12345.678),
  };
  for (const auto& p : cases) {
    const auto text = render(p);
    INFO(text);
    CHECK(parse_if_spec(text) == p);
    CHECK(parse_dist(text) == p);
    CHECK(classify(parse_if_spec(text)) == classify(p));
  }
  CHECK(render(validate(kInf, -1, 1, 1, 0)) == "if(p=inf,b=-1,c=1,q=1,x0=0)");
}

TEST_CASE("spec grammar") {
  const auto p = parse_if_spec(" if ( x0 = 1 , q=2, c=0.5,b=-1 ,p=inf ) ");
  CHECK(p == validate(kInf, -1, 0.5, 2, 1));
  CHECK(parse_if_spec("if(p=+2,b=1e0,c=1,q=1,x0=0)") == validate(2, 1, 1, 1, 0));

  CHECK_THROWS_AS(parse_if_spec("if(p=0,b=1,c=1,q=1)"), ParseError);
  CHECK_THROWS_AS(parse_if_spec("if(p=0,b=1,c=1,q=1,x0=0,x0=0)"), ParseError);
  CHECK_THROWS_AS(parse_if_spec("if(p=0,b=1,c=1,q=1,x0=0,r=2)"), ParseError);
  CHECK_THROWS_AS(parse_if_spec("if(p=0,b=1,c=1,q=1,x0=0"), ParseError);
  CHECK_THROWS_AS(parse_if_spec("if(p=0,b=1,c=1,q=1,x0=0,)"), ParseError);
  CHECK_THROWS_AS(parse_if_spec("if(p=infinity,b=1,c=1,q=1,x0=0)"), ParseError);
  CHECK_THROWS_AS(parse_if_spec("if(p=Inf,b=1,c=1,q=1,x0=0)"), ParseError);
  CHECK_THROWS_AS(parse_if_spec("if(p=0,b=inf,c=1,q=1,x0=0)"), ParseError);
  CHECK_THROWS_AS(parse_if_spec("if(p=0,b=1,c=1,q=1,x0=0x1)"), ParseError);
  CHECK_THROWS_AS(parse_if_spec("foo(p=0,b=1,c=1,q=1,x0=0)"), ParseError);
  CHECK_THROWS_AS(parse_if_spec("if(p=0,b=0,c=1,q=1,x0=0)"), InvalidParam);
}

TEST_CASE("named-case specs") {
  CHECK(parse_dist("pareto1(q=2,x0=1)") == validate(0, 1, 1, 2, 1));
  CHECK(parse_dist("rayleigh(c=2)") == validate(kInf, -1, 2, 2, 0));
  CHECK_THROWS_AS(parse_dist("nosuch(c=2)"), UnknownCase);
  CHECK_THROWS_AS(parse_dist("rayleigh(c=2,q=1)"), InvalidParam);
  CHECK_THROWS_AS(parse_dist("rayleigh()"), InvalidParam);
  CHECK_THROWS_AS(parse_dist("rayleigh(c=abc)"), ParseError);
}

TEST_CASE("Interpolation") {
  CHECK_THROWS_AS(Interpolation::infinite().value(), std::logic_error);
  CHECK(Interpolation::finite(2.0) == Interpolation::finite(2.0));
  CHECK_FALSE(Interpolation::finite(2.0) == Interpolation::infinite());
  CHECK_THROWS_AS(Interpolation::finite(kInf), InvalidParam);
}
