#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freealg/errors.hpp"
#include "freealg/lie.hpp"
#include "freealg/text.hpp"

using namespace freealg;

namespace {

NCPoly expr(const std::string& text, int arity) {
  return parse_expression(text, arity);
}

Word word(std::initializer_list<int> letters) {
  Word w;
  for (int i : letters) w.push_back(active(i));
  return w;
}

}  // namespace

TEST_CASE("bracket expansion") {
  CHECK(expr("[x1,[x1,x2]]", 2) ==
        expr("x1*x1*x2 - 2*x1*x2*x1 + x2*x1*x1", 2));
  CHECK(expr("[x1,x1]", 1).is_zero());
  CHECK(expr("[[x1,x2],x3]", 3) ==
        expr("x1*x2*x3 - x2*x1*x3 - x3*x1*x2 + x3*x2*x1", 3));
}

TEST_CASE("Dynkin map") {
  CHECK(dynkin_map(expr("x1*x2", 2)) == expr("[x1,x2]", 2));
  CHECK(dynkin_map(expr("x1*x2 - x2*x1", 2)) == expr("2*[x1,x2]", 2));
  CHECK(dynkin_map(expr("x1", 1)) == expr("x1", 1));

  SUBCASE("scales homogeneous Lie elements by their degree") {
    const NCPoly b = expr("[x1,[x1,x2]]", 2);
    CHECK(dynkin_map(b) == Scalar(3) * b);
  }
}

TEST_CASE("Lie membership") {
  CHECK(is_lie(expr("[x1,x2]", 2)));
  CHECK(!is_lie(expr("x1*x2", 2)));
  CHECK(is_lie(expr("x1 + [x1,x2]", 2)));
  CHECK(is_lie(NCPoly(2)));
  CHECK(!is_lie(NCPoly::constant(2, Scalar(1))));
}

TEST_CASE("Witt dimension") {
  CHECK(witt_dimension(2, 1) == 2);
  CHECK(witt_dimension(2, 2) == 1);
  CHECK(witt_dimension(2, 3) == 2);
  CHECK(witt_dimension(2, 4) == 3);
  CHECK(witt_dimension(2, 6) == 9);
  CHECK(witt_dimension(3, 3) == 8);
  CHECK(witt_dimension(1, 2) == 0);
}

TEST_CASE("Lyndon words") {
  CHECK(lyndon_words(2, 2) == std::vector<Word>{word({1, 2})});
  CHECK(lyndon_words(2, 3) ==
        std::vector<Word>{word({1, 1, 2}), word({1, 2, 2})});
  CHECK(lyndon_words(1, 2).empty());
  CHECK(lyndon_words(3, 1) ==
        std::vector<Word>{word({1}), word({2}), word({3})});

  SUBCASE("counts match the Witt dimension") {
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= 5; ++d)
        CHECK(static_cast<int>(lyndon_words(n, d).size()) ==
              witt_dimension(n, d));
  }
}

TEST_CASE("Lyndon basis") {
  const LyndonBasis basis = lyndon_basis(2, 3);
  REQUIRE(basis.words.size() == 2);
  REQUIRE(basis.elements.size() == 2);
  CHECK(basis.elements[0] == expr("[x1,[x1,x2]]", 2));
  CHECK(basis.elements[1] == expr("[[x1,x2],x2]", 2));
  for (const NCPoly& e : basis.elements) CHECK(is_lie(e));
}

TEST_CASE("coordinates in the Lyndon basis") {
  const LyndonBasis b22 = lyndon_basis(2, 2);
  CHECK(lie_coordinates(expr("[x1,x2]", 2), b22) ==
        std::vector<Scalar>{Scalar(1)});
  CHECK_THROWS_AS(lie_coordinates(expr("x1*x2", 2), b22), DomainError);

  const LyndonBasis b23 = lyndon_basis(2, 3);
  const auto coords = lie_coordinates(expr("2*[x1,[x1,x2]]", 2), b23);
  CHECK(coords == std::vector<Scalar>{Scalar(2), Scalar(0)});

  SUBCASE("round trip through coordinates") {
    for (int d = 1; d <= 4; ++d) {
      const LyndonBasis basis = lyndon_basis(2, d);
      for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        const auto c = lie_coordinates(basis.elements[i], basis);
        CHECK(from_lie_coordinates(c, basis) == basis.elements[i]);
        for (std::size_t j = 0; j < c.size(); ++j)
          CHECK(c[j] == (i == j ? Scalar(1) : Scalar(0)));
      }
    }
  }
}
