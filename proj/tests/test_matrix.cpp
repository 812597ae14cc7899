#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freealg/matrix.hpp"

using namespace freealg;

namespace {

QMatrix make(int rows, int cols, std::initializer_list<int> vals) {
  QMatrix m(rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar(*it++);
  return m;
}

bool in_kernel(const QMatrix& m, const std::vector<Scalar>& v) {
  for (int i = 0; i < m.rows; ++i) {
    Scalar acc(0);
    for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * v[j];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("exact rank") {
  CHECK(exact_rank(make(2, 2, {1, 2, 2, 4})) == 1);
  CHECK(exact_rank(make(2, 2, {1, 2, 3, 4})) == 2);
  CHECK(exact_rank(make(3, 3, {0, 0, 0, 0, 0, 0, 0, 0, 0})) == 0);
  CHECK(exact_rank(QMatrix(0, 4)) == 0);
  CHECK(exact_rank(QMatrix(4, 0)) == 0);
  CHECK(exact_rank(make(4, 1, {0, -1, -1, 0})) == 1);

  SUBCASE("rational entries") {
    QMatrix m(2, 3);
    m.at(0, 0) = Scalar(1, 2);
    m.at(0, 1) = Scalar(1, 3);
    m.at(0, 2) = Scalar(1, 6);
    m.at(1, 0) = Scalar(1, 5);
    m.at(1, 1) = Scalar(1, 7);
    m.at(1, 2) = Scalar(1, 9);
    CHECK(exact_rank(m) == 2);

    m.at(1, 0) = Scalar(3, 2);
    m.at(1, 1) = Scalar(1);
    m.at(1, 2) = Scalar(1, 2);
    CHECK(exact_rank(m) == 1);  // second row is 3 times the first
  }

  SUBCASE("identity blocks") {
    QMatrix m(5, 5);
    for (int i = 0; i < 5; ++i) m.at(i, i) = Scalar(1);
    CHECK(exact_rank(m) == 5);
  }
}

TEST_CASE("kernel basis") {
  SUBCASE("rank-deficient square matrix") {
    const QMatrix m = make(2, 2, {1, 2, 2, 4});
    const auto kernel = kernel_basis(m);
    REQUIRE(kernel.size() == 1);
    CHECK(in_kernel(m, kernel[0]));
  }

  SUBCASE("full-rank matrix has trivial kernel") {
    CHECK(kernel_basis(make(2, 2, {1, 2, 3, 4})).empty());
  }

  SUBCASE("wide matrix") {
    const QMatrix m = make(2, 4, {1, 0, 1, 0, 0, 1, 0, 1});
    const auto kernel = kernel_basis(m);
    REQUIRE(static_cast<int>(kernel.size()) == m.cols - exact_rank(m));
    for (const auto& v : kernel) CHECK(in_kernel(m, v));
  }

  SUBCASE("zero matrix") {
    const QMatrix m(3, 3);
    CHECK(kernel_basis(m).size() == 3);
  }
}

TEST_CASE("rank accumulator") {
  RankAccumulator acc;
  CHECK(acc.rank() == 0);
  CHECK(acc.add({Scalar(1), Scalar(2)}));
  CHECK(!acc.add({Scalar(2), Scalar(4)}));
  CHECK(acc.add({Scalar(0), Scalar(1)}));
  CHECK(acc.rank() == 2);
  CHECK(!acc.add({Scalar(5), Scalar(-3)}));
  CHECK(!acc.add({Scalar(0), Scalar(0)}));
  CHECK(acc.rank() == 2);

  SUBCASE("agrees with matrix rank on a fixed sample") {
    const QMatrix m = make(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    RankAccumulator rows;
    for (int i = 0; i < m.rows; ++i) {
      std::vector<Scalar> row(m.cols);
      for (int j = 0; j < m.cols; ++j) row[j] = m.at(i, j);
      rows.add(row);
    }
    CHECK(rows.rank() == exact_rank(m));
  }
}
