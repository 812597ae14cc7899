#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "freealg/cohomology.hpp"
#include "freealg/errors.hpp"
#include "freealg/operators.hpp"
#include "freealg/text.hpp"

using namespace freealg;

namespace {

NCPoly expr(const std::string& text, int arity) {
  return parse_expression(text, arity);
}

}  // namespace

TEST_CASE("permutation enumeration") {
  const auto perms = permutations(3);
  REQUIRE(perms.size() == 6);
  CHECK(perms.front() == std::vector<int>{1, 2, 3});
  CHECK(perms.back() == std::vector<int>{3, 2, 1});
  CHECK(permutation_sign({1, 2, 3}) == 1);
  CHECK(permutation_sign({2, 1, 3}) == -1);
  CHECK(permutation_sign({3, 1, 2}) == 1);
}

TEST_CASE("simplicial differential") {
  CHECK(delta(expr("x1", 1)) == expr("x2 - x1", 2));
  CHECK(delta(expr("x1*x2", 2)) == expr("x2*x3 - x1*x3 + x1*x2", 3));
  CHECK(delta(NCPoly::constant(1, Scalar(5))).is_zero());
}

TEST_CASE("retraction s and the contraction identity") {
  CHECK(s_retract(expr("x1*x2", 2)).is_zero());
  CHECK(s_retract(expr("x2*x3", 3)) == expr("x1*x2", 2));
  const NCPoly f = expr("x1*x2", 2);
  CHECK(s_retract(delta(f)) + delta(s_retract(f)) == f);
}

TEST_CASE("translation defect tau") {
  CHECK(tau_defect(expr("x2 - x1", 2)).is_zero());
  CHECK(tau_defect(expr("x1", 1)) == expr("y", 1));
  CHECK(tau_defect(expr("x1*x2", 2)) == expr("x1*y + y*x2 + y^2", 2));
}

TEST_CASE("difference embedding R and its left inverse") {
  CHECK(r_embed(expr("x1", 1)) == expr("x2 - x1", 2));
  CHECK(r_embed(expr("[x1,x2]", 2)) == expr("[x2 - x1, x3 - x2]", 3));
  CHECK(r_embed(NCPoly::constant(2, Scalar(1))) ==
        NCPoly::constant(3, Scalar(1)));

  CHECK(r_invert(expr("x2 - x1", 2)) == expr("x1", 1));
  CHECK(r_invert(expr("[x2 - x1, x3 - x2]", 3)) == expr("[x1,x2]", 2));
  CHECK_THROWS_AS(r_invert(expr("x1", 1)), DomainError);
  CHECK(r_invert(r_embed(expr("x1*x1*x2", 2))) == expr("x1*x1*x2", 2));
}

TEST_CASE("group differential deltaA") {
  CHECK(delta_A(expr("x1", 1)).is_zero());
  CHECK(delta_A(expr("x1^2", 1)) == expr("-x1*x2 - x2*x1", 2));
  CHECK(delta_A(expr("[x1,x2]", 2)).is_zero());
  CHECK(delta(r_embed(expr("x1*x2", 2))) ==
        r_embed(delta_A(expr("x1*x2", 2))));
}

TEST_CASE("antisymmetrization") {
  CHECK(ant(expr("[x1,x2]", 2)) == expr("[x1,x2]", 2));
  CHECK(ant(expr("x1*x2", 2)) == expr("1/2*x1*x2 - 1/2*x2*x1", 2));
  CHECK(ant(expr("x1^2", 2)).is_zero());
  CHECK(antisymmetrizer(2) == expr("x1*x2 - x2*x1", 2));
  CHECK(antisymmetrizer(3) ==
        expr("x1*x2*x3 - x1*x3*x2 - x2*x1*x3 + x2*x3*x1 + x3*x1*x2 - "
             "x3*x2*x1",
             3));
  CHECK(ant(antisymmetrizer(3)) == antisymmetrizer(3));
}

TEST_CASE("averaging projector P") {
  CHECK(p_project(expr("x1^3", 1)) == expr("x1^3", 1));
  CHECK(p_project(expr("x2 - x1", 2)) == expr("x2 - x1", 2));
  CHECK(p_project(expr("x1*x2", 2)) ==
        expr("1/2*x1*x2 - 1/2*x1^2 + 1/2*x2^2 - 1/2*x2*x1", 2));
  CHECK(p_project(expr("[x2 - x1, x3 - x2]", 3)) ==
        expr("[x2 - x1, x3 - x1]", 3));

  SUBCASE("projector properties on a degree-3 word") {
    const NCPoly f = expr("x1*x1*x2", 2);
    CHECK(p_project(p_project(f)) == p_project(f));
    CHECK(delta(p_project(f)) == p_project(delta(f)));
  }
}

TEST_CASE("inductive homotopy G") {
  CHECK(g_homotopy(expr("x1*x1", 1)).is_zero());
  CHECK(g_homotopy(expr("x1*x2", 2)).is_zero());

  const NCPoly f = expr("x1*x2", 2);
  CHECK(g_homotopy(delta(f)) == f - p_project(f));
  CHECK(g_homotopy(delta(f)) ==
        expr("x1*x2 - (1/2*x1*x2 - 1/2*x1^2 + 1/2*x2^2 - 1/2*x2*x1)", 2));

  SUBCASE("homotopy identity at arity 3") {
    const NCPoly w = expr("x1*x2*x3", 3);
    CHECK(g_homotopy(delta(w)) + delta(g_homotopy(w)) == w - p_project(w));
  }

  SUBCASE("output carries no internal parameter letters") {
    CHECK(!g_homotopy(expr("x1*x2*x3", 3)).has_param_letters());
  }
}

TEST_CASE("invariant homotopy GA") {
  const NCPoly g = expr("x1*x2", 2);
  CHECK(g_a(delta_A(g)) + delta_A(g_a(g)) == g - ant(g));
  CHECK(tau_defect(r_embed(g)).is_zero());

  SUBCASE("GA of the arity-2 cocycle [x1,x2] vanishes") {
    CHECK(g_a(expr("[x1,x2]", 2)).is_zero());
  }
}

TEST_CASE("closed-form G3 matches the inductive construction") {
  CHECK(g_closed_form(3, delta(expr("x1*x2", 2))) ==
        g_homotopy(delta(expr("x1*x2", 2))));
  // x1*x2*x3 lands on the closed-form value; x1*x1*x2 collapses to x1^3
  CHECK(g_closed_form(3, expr("x1*x2*x3", 3)) ==
        expr("x1^3 - 1/2*x1*(x2 - x1)^2", 2));
  CHECK(g_homotopy(expr("x1*x2*x3", 3)) ==
        expr("x1^3 - 1/2*x1*(x2 - x1)^2", 2));
  CHECK(g_closed_form(3, expr("x1*x1*x2", 3)) == expr("x1^3", 2));
  CHECK(g_homotopy(expr("x1*x1*x2", 3)) == expr("x1^3", 2));

  for (const Word& w : word_basis(3, 3)) {
    const NCPoly f = NCPoly::monomial(3, w);
    CHECK(g_closed_form(3, f) == g_homotopy(f));
  }

  CHECK_THROWS_AS(g_closed_form(5, expr("x1", 1)), DomainError);
  CHECK_THROWS_AS(g_closed_form(3, expr("x1*x2", 2)), DomainError);
}

TEST_CASE("closed-form G4 diagnostic") {
  const G4Diagnostic diag = g4_diagnostic(2);
  CHECK(diag.degree == 2);
  CHECK(diag.total == 16);
  CHECK(diag.matching + static_cast<int>(diag.mismatches.size()) ==
        diag.total);
}

TEST_CASE("conventions text is present") {
  const std::string text = conventions_text();
  CHECK(text.find("delta") != std::string::npos);
  CHECK(!text.empty());
}
