#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freealg/errors.hpp"
#include "freealg/lie.hpp"
#include "freealg/series.hpp"
#include "freealg/text.hpp"

using namespace freealg;

namespace {

NCPoly expr(const std::string& text, int arity) {
  return parse_expression(text, arity);
}

// Straight-line recomputations, kept separate from the library implementation
// so that the two can disagree.
NCPoly oracle_exp(const NCPoly& f, int max_degree) {
  NCPoly acc = NCPoly::constant(f.arity(), Scalar(1));
  Scalar factorial(1);
  NCPoly power = NCPoly::constant(f.arity(), Scalar(1));
  for (int k = 1; k <= max_degree; ++k) {
    power = (power * f).truncated(max_degree);
    factorial *= Scalar(k);
    acc = acc + Scalar(1) / factorial * power;
  }
  return acc;
}

NCPoly oracle_log(const NCPoly& f, int max_degree) {
  const NCPoly u = f - NCPoly::constant(f.arity(), Scalar(1));
  NCPoly acc(f.arity());
  NCPoly power = NCPoly::constant(f.arity(), Scalar(1));
  for (int k = 1; k <= max_degree; ++k) {
    power = (power * u).truncated(max_degree);
    const Scalar sign = (k % 2 == 1) ? Scalar(1) : Scalar(-1);
    acc = acc + sign / Scalar(k) * power;
  }
  return acc;
}

}  // namespace

TEST_CASE("exponential series") {
  const NCPoly x1 = expr("x1", 2);
  CHECK(exp_trunc(x1, 3) == expr("1 + x1 + 1/2*x1^2 + 1/6*x1^3", 2));
  CHECK(exp_trunc(NCPoly(1), 4) == NCPoly::constant(1, Scalar(1)));
  CHECK_THROWS_AS(exp_trunc(expr("1 + x1", 1), 3), DomainError);

  SUBCASE("degree-2 part of exp(x1) exp(x2)") {
    const NCPoly prod =
        (exp_trunc(expr("x1", 2), 2) * exp_trunc(expr("x2", 2), 2))
            .truncated(2);
    CHECK(prod.homogeneous_component(2) ==
          expr("1/2*x1^2 + x1*x2 + 1/2*x2^2", 2));
  }
}

TEST_CASE("logarithm series") {
  CHECK(log_trunc(exp_trunc(expr("x1", 1), 5), 5) == expr("x1", 1));
  CHECK(log_trunc(expr("1 + x1", 1), 3) ==
        expr("x1 - 1/2*x1^2 + 1/3*x1^3", 1));
  CHECK_THROWS_AS(log_trunc(expr("x1", 1), 3), DomainError);
  CHECK_THROWS_AS(log_trunc(expr("2 + x1", 1), 3), DomainError);
}

TEST_CASE("round trips against the straight-line oracle") {
  const NCPoly f = expr("x1 + [x1,x2]", 2);
  for (int d = 1; d <= 4; ++d) {
    CHECK(exp_trunc(f, d) == oracle_exp(f, d));
    CHECK(log_trunc(exp_trunc(f, d), d) == f.truncated(d));
  }
  const NCPoly g = expr("1 + x1 + x2*x1", 2);
  CHECK(log_trunc(g, 4) == oracle_log(g, 4));
}

TEST_CASE("Campbell series") {
  const NCPoly series = bch(3);
  CHECK(series.homogeneous_component(1) == expr("x1 + x2", 2));
  CHECK(series.homogeneous_component(2) == expr("1/2*[x1,x2]", 2));
  CHECK(series.homogeneous_component(3) ==
        expr("1/12*[x1,[x1,x2]] + 1/12*[x2,[x2,x1]]", 2));

  SUBCASE("all homogeneous components are Lie elements") {
    const NCPoly deep = bch(5);
    for (int d = 1; d <= 5; ++d)
      CHECK(is_lie(deep.homogeneous_component(d)));
  }

  SUBCASE("matches the straight-line oracle") {
    const NCPoly product = (oracle_exp(expr("x1", 2), 4) *
                            oracle_exp(expr("x2", 2), 4))
                               .truncated(4);
    CHECK(bch(4) == oracle_log(product, 4));
  }
}

TEST_CASE("series composition") {
  const NCPoly f = expr("x1*x2", 2);
  const std::vector<NCPoly> args = {expr("x1 + x2", 2), expr("x2", 2)};
  CHECK(series_compose(f, args, 4) == expr("(x1 + x2)*x2", 2));

  SUBCASE("truncation drops high-degree cross terms") {
    const auto composed =
        series_compose(f, {expr("x1^2", 2), expr("x2^2", 2)}, 3);
    CHECK(composed.is_zero());
  }

  SUBCASE("associativity of the Campbell composition") {
    const NCPoly b = bch(4);
    const NCPoly x1 = expr("x1", 3);
    const NCPoly x2 = expr("x2", 3);
    const NCPoly x3 = expr("x3", 3);
    const NCPoly left = series_compose(
        b, {series_compose(b, {x1, x2}, 4), x3}, 4);
    const NCPoly right = series_compose(
        b, {x1, series_compose(b, {x2, x3}, 4)}, 4);
    CHECK(left == right);
  }

  SUBCASE("arity mismatch is rejected") {
    CHECK_THROWS_AS(series_compose(f, {expr("x1", 2)}, 3), DomainError);
  }
}
