#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>

#include "freealg/cohomology.hpp"
#include "freealg/text.hpp"

using namespace freealg;

namespace {

std::string round_trip(const std::string& text, int arity) {
  return format_expression(parse_expression(text, arity));
}

ParseError capture(const std::string& text, int arity) {
  try {
    parse_expression(text, arity);
  } catch (const ParseError& e) {
    return e;
  }
  REQUIRE(false);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("basic parsing and formatting") {
  CHECK(round_trip("[x1,x2]", 2) == "x1*x2 - x2*x1");
  CHECK(round_trip("2/3*x1^2", 1) == "2/3*x1^2");
  CHECK(round_trip("x1*x1", 1) == "x1^2");
  CHECK(round_trip("1", 1) == "1");
  CHECK(round_trip("0", 2) == "0");
  CHECK(round_trip("x1 - x1", 1) == "0");
  CHECK(round_trip("-x1", 1) == "-x1");
  CHECK(round_trip("+x1", 1) == "x1");
  CHECK(round_trip("y*x1", 1) == "y*x1");
  CHECK(round_trip("3*(2)*x1", 1) == "6*x1");
  CHECK(round_trip("(x1 + x2)^2", 2) == "x1^2 + x1*x2 + x2*x1 + x2^2");
  CHECK(round_trip("[x1,[x1,x2]]", 2) == "x1^2*x2 - 2*x1*x2*x1 + x2*x1^2");
}

TEST_CASE("whitespace is insignificant") {
  CHECK(parse_expression("  2/3 * x1 ^ 2  ", 1) ==
        parse_expression("2/3*x1^2", 1));
  CHECK(parse_expression("[ x1 , x2 ]", 2) == parse_expression("[x1,x2]", 2));
}

TEST_CASE("parse errors carry position and expectations") {
  SUBCASE("unclosed bracket") {
    const ParseError e = capture("[x1", 2);
    CHECK(e.position() == 3);
    REQUIRE(e.expected().size() == 1);
    CHECK(e.expected()[0] == ",");
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }

  SUBCASE("generator index zero") {
    const ParseError e = capture("x0", 2);
    CHECK(std::string(e.what()).find("generator index 0") !=
          std::string::npos);
  }

  SUBCASE("generator index beyond the arity") {
    const ParseError e = capture("x3", 2);
    CHECK(std::string(e.what()).find("exceeds arity 2") != std::string::npos);
  }

  SUBCASE("empty input") {
    CHECK_THROWS_AS(parse_expression("", 1), ParseError);
    CHECK_THROWS_AS(parse_expression("   ", 1), ParseError);
  }

  SUBCASE("dangling operator") {
    CHECK_THROWS_AS(parse_expression("x1 +", 1), ParseError);
    CHECK_THROWS_AS(parse_expression("2*", 1), ParseError);
  }

  SUBCASE("unbalanced parenthesis") {
    CHECK_THROWS_AS(parse_expression("(x1", 1), ParseError);
    CHECK_THROWS_AS(parse_expression("x1)", 1), ParseError);
  }

  SUBCASE("zero denominator") {
    const ParseError e = capture("1/0", 1);
    CHECK(std::string(e.what()).find("zero") != std::string::npos);
  }

  SUBCASE("oversized exponent") {
    CHECK_THROWS_AS(parse_expression("x1^99999999999999999999", 1),
                    ParseError);
  }
}

TEST_CASE("parse of format is the identity") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 3; ++d)
      for (const Word& w : word_basis(n, d)) {
        const NCPoly f = NCPoly::monomial(n, w);
        CHECK(parse_expression(format_expression(f), n) == f);
      }

  const char* corpus[] = {
      "x1 + x2",
      "x1 - 2*x2 + 3",
      "-1/2*x1*x2 + 1/2*x2*x1",
      "[x1,[x2,x1]] - x1^3",
      "y^2 + y*x1 + x1*y",
      "7/3",
      "(x1 + x2)*(x1 - x2)",
      "2*[x1,x2]^2",
  };
  for (const char* text : corpus) {
    const NCPoly f = parse_expression(text, 2);
    CHECK(parse_expression(format_expression(f), 2) == f);
  }
}
