#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freealg/matrix.hpp"
#include "freealg/ncpoly.hpp"

namespace freealg {

// Evaluates a plain element on square matrices (mats[i] stands for x_{i+1});
// words become matrix products and the constant term a multiple of the
// identity.
QMatrix matrix_eval(const NCPoly& f, const std::vector<QMatrix>& mats);

struct OracleOptions {
  int trials = 20;
  int matrix_size = 3;
  std::uint64_t seed = 1;
  bool fault_inject = false;
  int threads = 1;
};

struct OracleTaskReport {
  std::string identity;
  int n = 0;
  int d = 0;
  int trials = 0;
  int matrix_size = 0;
  std::uint64_t seed = 0;
  bool fault_inject = false;
  int failures = 0;
  std::string first_failure;  // empty when all trials agreed

  bool passed() const { return failures == 0; }
};

// Names accepted by check_identity.
const std::vector<std::string>& oracle_identity_names();

// Checks one operator identity on random degree-d words in x1..xn: both
// sides are computed symbolically (cached per distinct word) and then
// evaluated on random rational matrices. With fault_inject set, the first
// projector term of the identity (or the first composite when it has none)
// is doubled, so a sensitive oracle must report failures. Trial data is
// drawn up front from a fixed-seed generator, so results do not depend on
// the thread count.
OracleTaskReport check_identity(const std::string& identity, int n, int d,
                                const OracleOptions& options);

std::string report_text(const std::vector<OracleTaskReport>& reports);

}  // namespace freealg
