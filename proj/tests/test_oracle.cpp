#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "freealg/errors.hpp"
#include "freealg/oracle.hpp"
#include "freealg/text.hpp"

using namespace freealg;

namespace {

QMatrix diag(std::initializer_list<int> vals) {
  const int k = static_cast<int>(vals.size());
  QMatrix m(k, k);
  int i = 0;
  for (int v : vals) {
    m.at(i, i) = Scalar(v);
    ++i;
  }
  return m;
}

QMatrix unit(int size, int r, int c) {
  QMatrix m(size, size);
  m.at(r, c) = Scalar(1);
  return m;
}

}  // namespace

TEST_CASE("matrix evaluation") {
  SUBCASE("commuting matrices kill the commutator") {
    const NCPoly f = parse_expression("[x1,x2]", 2);
    const QMatrix result = matrix_eval(f, {diag({1, 2}), diag({3, 5})});
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(result.at(i, j) == 0);
  }

  SUBCASE("matrix units multiply as expected") {
    const NCPoly f = parse_expression("x1*x2", 2);
    const QMatrix result =
        matrix_eval(f, {unit(2, 0, 1), unit(2, 1, 0)});
    CHECK(result.at(0, 0) == Scalar(1));
    CHECK(result.at(0, 1) == 0);
    CHECK(result.at(1, 0) == 0);
    CHECK(result.at(1, 1) == 0);
  }

  SUBCASE("constants evaluate to multiples of the identity") {
    const QMatrix result =
        matrix_eval(NCPoly::constant(1, Scalar(1)), {diag({7, 9})});
    CHECK(result.at(0, 0) == Scalar(1));
    CHECK(result.at(1, 1) == Scalar(1));
    CHECK(result.at(0, 1) == 0);
  }

  SUBCASE("rejects an element with auxiliary coefficients") {
    NCPoly f = parse_expression("x1", 1);
    CHECK_THROWS_AS(
        matrix_eval(f.with_aux_dim(1), std::vector<QMatrix>{diag({1, 2})}),
        DomainError);
  }
}

TEST_CASE("identity names are validated") {
  CHECK(oracle_identity_names().size() == 5);
  OracleOptions options;
  CHECK_THROWS_AS(check_identity("no_such_identity", 2, 2, options),
                  DomainError);
}

TEST_CASE("randomized identity checks pass") {
  OracleOptions options;
  options.trials = 10;
  options.seed = 7;
  for (const std::string& name : oracle_identity_names()) {
    const OracleTaskReport report = check_identity(name, 3, 3, options);
    CHECK(report.passed());
    CHECK(report.failures == 0);
    CHECK(report.trials == 10);
    CHECK(report.first_failure.empty());
  }
}

TEST_CASE("fault injection is detected") {
  OracleOptions options;
  options.trials = 30;
  options.seed = 7;
  options.fault_inject = true;
  int faulted = 0;
  for (const std::string& name : oracle_identity_names()) {
    const OracleTaskReport report = check_identity(name, 3, 3, options);
    if (!report.passed()) {
      ++faulted;
      CHECK(!report.first_failure.empty());
    }
  }
  CHECK(faulted == 5);
}

TEST_CASE("zero trials pass vacuously") {
  OracleOptions options;
  options.trials = 0;
  const OracleTaskReport report =
      check_identity("g_homotopy_identity", 2, 2, options);
  CHECK(report.passed());
  CHECK(report.trials == 0);
}

TEST_CASE("fixed seeds reproduce and thread counts do not matter") {
  OracleOptions a;
  a.trials = 8;
  a.seed = 42;
  OracleOptions b = a;
  b.threads = 4;
  const auto ra = check_identity("ga_homotopy_identity", 3, 3, a);
  const auto rb = check_identity("ga_homotopy_identity", 3, 3, b);
  CHECK(ra.failures == rb.failures);
  CHECK(ra.first_failure == rb.first_failure);
  CHECK(report_text({ra}) == report_text({rb}));
}

TEST_CASE("report text") {
  OracleOptions options;
  options.trials = 3;
  const auto report = check_identity("s_delta_homotopy", 2, 2, options);
  const std::string text = report_text({report});
  CHECK(text.find("s_delta_homotopy") != std::string::npos);
  CHECK(text.find("ok") != std::string::npos);
}
