#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "ifdist/errors.hpp"
#include "ifdist/moments.hpp"
#include "ifdist/oracle.hpp"
#include "ifdist/specfun.hpp"

using namespace ifdist;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("IF1 moments") {
  CHECK_THAT(moment_if1(validate(0, 2, 1, 3, 0), 0).value(), WithinAbs(1.0, 1e-15));
  CHECK_THAT(moment_if1(validate(0, 1, 1, 2, 1), 1).value(), WithinRel(2.0, 1e-14));
  // Gamma(2.5) Gamma(1.5) / Gamma(3), quadrature reference.
  CHECK_THAT(moment_if1(validate(0, 2, 1, 3, 0), 1).value(),
             WithinRel(0.5890486225480862, 1e-12));
  CHECK(moment_if1(validate(0, 1, 1, 1, 0), 1).is_divergent());
  CHECK(moment_if1(validate(0, -2, 1, 3, 0), 1).is_finite());
  CHECK(moment_if1(validate(0, -2, 1, 3, 0), 2).is_divergent());
  CHECK_THROWS_AS(moment_if1(validate(1, 1, 1, 1, 0), 1), Unsupported);
  CHECK(moment_if1(validate(0, 2, 1, 3, 0), 1).method() == MomentMethod::ClosedForm);
}

TEST_CASE("IF2 moments") {
  CHECK_THAT(moment_if2(validate(kInf, -1, 3, 1, 0), 1).value(), WithinRel(3.0, 1e-14));
  CHECK_THAT(moment_if2(validate(kInf, -1, 2, 2, 0), 1).value(),
             WithinRel(std::sqrt(std::numbers::pi), 1e-14));
  CHECK_THAT(moment_if2(validate(kInf, -1, 1, 1, 0), 4).value(), WithinRel(24.0, 1e-13));
  CHECK(moment_if2(validate(kInf, 1, 1, 1, 0), 1).is_divergent());
  CHECK(moment_if2(validate(kInf, 1, 1, 2, 0), 1).is_finite());
  CHECK_THROWS_AS(moment_if2(validate(0, 1, 1, 1, 0), 1), Unsupported);
}

TEST_CASE("IF3 moments") {
  for (double p : {0.5, 1.0, 4.0}) {
    CHECK_THAT(moment_if3(validate(p, 1, 2, 1.5, 0), 0).value(), WithinAbs(1.0, 1e-13));
  }
  CHECK_THAT(moment_if3(validate(3, 1, 2, 5, 0.5), 2).value(),
             WithinRel(2.3447739328036756, 1e-11));
  // Generalized Lomax, m = 2, q = 2: quadrature reference value.
  CHECK_THAT(moment_if3(validate(1, 1, 1, 2, 0), 1).value(),
             WithinRel(1.1785113019775793, 1e-11));
  CHECK(moment_if3(validate(2, 1, 1, 1, 0), 1).is_divergent());
  CHECK_THAT(moment_if3(validate(0, 1, 1, 3, 0), 2).value(),
             WithinRel(moment_if1(validate(0, 1, 1, 3, 0), 2).value(), 1e-12));
  CHECK_THROWS_AS(moment_if3(validate(2, 2, 1, 1, 0), 1), Unsupported);
}

TEST_CASE("IF3 moments with large p and r agree with quadrature") {
  for (const auto& params : {validate(400, 1, 1, 30, 0), validate(1e4, 1, 2, 12, 0)}) {
    for (unsigned r : {3u, 8u}) {
      const auto m = moment(params, r);
      REQUIRE(m.is_finite());
      QuadOptions opts;
      opts.abs_tol = 0;
      opts.rel_tol = 1e-11;
      const double quad =
          oracle::quad_expectation_point(
              params, [r](const SupportPoint& pt) { return std::pow(pt.x, r); }, opts)
              .value;
      INFO(render(params) << " r = " << r << " via " << to_string(m.method()));
      CHECK_THAT(m.value(), WithinRel(quad, 1e-8));
    }
  }
}

TEST_CASE("dispatch and the general family") {
  CHECK_THAT(moment(validate(0, 1, 1, 2, 1), 1).value(), WithinRel(2.0, 1e-14));
  const auto general = validate(2, 3, 1, 2, 0);
  CHECK(moment(general, 1).kind() == MomentResult::Kind::NoClosedForm);
  CHECK_THROWS_AS(moment(general, 1).value(), std::logic_error);

  MomentOptions fallback;
  fallback.numeric_fallback = true;
  const auto m = moment(general, 1, fallback);
  REQUIRE(m.is_finite());
  CHECK(m.method() == MomentMethod::Quadrature);
  CHECK_THAT(m.value(), WithinRel(0.9474894098882677, 1e-9));
  fallback.rel_tol = 1e-13;
  CHECK_THAT(moment(general, 1, fallback).value(), WithinRel(m.value(), 1e-7));

  // E[X^2] = 9 for p = 2, b = -1, c = 1, q = 1; the tail decays like x^-4.
  const auto heavy = validate(2, -1, 1, 1, 0);
  CHECK(moment_exists(heavy, 2));
  CHECK_FALSE(moment_exists(heavy, 3));
  CHECK_THAT(moment(heavy, 2, {true, 1e-10}).value(), WithinRel(9.0, 1e-8));
  CHECK(moment(heavy, 3, {true, 1e-10}).is_divergent());
  CHECK(moment(validate(2, 3, 1, 2, 0), 6, {true, 1e-10}).is_divergent());
}

TEST_CASE("existence conditions") {
  CHECK(moment_exists(validate(0, 2, 1, 3, 0), 5));
  CHECK_FALSE(moment_exists(validate(0, 2, 1, 3, 0), 6));
  CHECK(moment_exists(validate(0, -2, 1, 3, 0), 1));
  CHECK_FALSE(moment_exists(validate(0, -2, 1, 3, 0), 2));
  CHECK(moment_exists(validate(kInf, -0.1, 1, 1, 0), 40));
  CHECK_FALSE(moment_exists(validate(kInf, 1, 1, 3, 0), 3));
  CHECK(moment_exists(validate(5, 1, 1, 2.5, 0), 2));
  CHECK_FALSE(moment_exists(validate(5, 1, 1, 2.5, 0), 3));
  CHECK(moment_exists(validate(1, 1, 1, 1, 0), 0));
}

TEST_CASE("location shift") {
  const auto base = validate(0, 2, 1.5, 5, 0);
  const auto shifted = validate(0, 2, 1.5, 5, 2);
  const double m1 = moment(base, 1).value();
  const double m2 = moment(base, 2).value();
  CHECK_THAT(moment(shifted, 2).value(), WithinRel(m2 + 4 * m1 + 4, 1e-13));
}

TEST_CASE("method names") {
  CHECK(std::string(to_string(MomentMethod::ClosedForm)) == "closed-form");
  CHECK(std::string(to_string(MomentMethod::Quadrature)) == "quadrature");
}
