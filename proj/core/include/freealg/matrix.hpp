#pragma once

#include <map>
#include <vector>

#include "freealg/scalar.hpp"

namespace freealg {

// Dense rational matrix, row-major.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> entries;

  QMatrix() = default;
  QMatrix(int r, int c)
      : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, Scalar(0)) {}

  Scalar& at(int r, int c) {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }
  const Scalar& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }
};

// Rank over the rationals: rows are scaled to coprime integers, then
// fraction-free (Bareiss) elimination runs with deterministic pivoting
// (first nonzero entry of the remaining submatrix in row-major order).
int exact_rank(const QMatrix& m);

// Basis of the right null space {x : m x = 0}, via reduced row echelon form;
// deterministic, one vector per free column in column order.
std::vector<std::vector<Scalar>> kernel_basis(const QMatrix& m);

// Incremental row space: add vectors one at a time and learn whether the
// rank grew. Used for rank-augmentation certificates of cohomology
// generators.
class RankAccumulator {
 public:
  // true iff v was independent of the rows added so far
  bool add(const std::vector<Scalar>& v);
  int rank() const { return static_cast<int>(echelon_.size()); }

 private:
  std::map<int, std::vector<Scalar>> echelon_;  // pivot column -> reduced row
};

}  // namespace freealg
