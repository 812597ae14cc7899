#pragma once

#include <cstddef>
#include <vector>

#include "freealg/matrix.hpp"
#include "freealg/ncpoly.hpp"

namespace freealg {

enum class Algebra { Assoc, Lie };

// All words of length d over x1..xn, ordered by WordLess (lexicographic at
// fixed degree).
std::vector<Word> word_basis(int n, int d);

// Position of w in word_basis(n, d) where d = w.size().
std::size_t word_index(int n, const Word& w);

// Coordinate vector of a homogeneous degree-d element in word_basis(n, d).
std::vector<Scalar> word_coordinates(const NCPoly& f, int n, int d);

// Matrix of the Hochschild-style differential from arity n to arity n + 1 in
// degree d, with columns indexed by the source basis and rows by the target
// basis. Assoc uses the word basis, Lie the Lyndon basis.
QMatrix operator_matrix(Algebra alg, int n, int d);

struct BettiEntry {
  int n = 0;
  int d = 0;
  long long dim = 0;
  int rank_out = 0;
  int rank_in = 0;
  long long betti = 0;
  std::vector<NCPoly> generators;  // filled only when requested
};

// Betti numbers for 1 <= n <= n_max, 1 <= d <= d_max, as
// dim - rank_out - rank_in (rank_in = 0 at n = 1). Entries are ordered by n,
// then d. When with_generators is set, each entry with betti > 0 carries
// cocycles that are independent modulo the incoming image, normalized so the
// first nonzero coordinate is 1. Output is independent of the thread count.
std::vector<BettiEntry> betti_table(Algebra alg, int n_max, int d_max,
                                    bool with_generators, int threads = 1);

}  // namespace freealg
