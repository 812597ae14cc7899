#include "freealg/matrix.hpp"

#include <cstddef>
#include <utility>

#include "freealg/errors.hpp"

namespace freealg {

namespace {

// Scale each row by the lcm of its denominators, then divide by the gcd of
// the resulting integers, leaving coprime integer rows with the same row
// space.
std::vector<std::vector<Integer>> integer_rows(const QMatrix& m) {
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) {
    Integer l(1);
    for (int j = 0; j < m.cols; ++j) {
      const Scalar& q = m.at(i, j);
      if (sgn(q) != 0) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
      }
    }
    std::vector<Integer> row(static_cast<std::size_t>(m.cols), Integer(0));
    Integer g(0);
    for (int j = 0; j < m.cols; ++j) {
      const Scalar& q = m.at(i, j);
      if (sgn(q) == 0) continue;
      Integer v = q.get_num() * (l / q.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      row[static_cast<std::size_t>(j)] = std::move(v);
    }
    if (g > 1) {
      for (auto& v : row) {
        if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      }
    }
    rows[static_cast<std::size_t>(i)] = std::move(row);
  }
  return rows;
}

}  // namespace

int exact_rank(const QMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  auto a = integer_rows(m);
  const int rows = m.rows;
  const int cols = m.cols;
  std::vector<bool> col_done(static_cast<std::size_t>(cols), false);

  Integer prev(1);
  int rank = 0;
  int r = 0;
  while (r < rows) {
    // pivot: first nonzero entry of the remaining submatrix, row-major
    int pr = -1;
    int pc = -1;
    for (int i = r; i < rows && pr < 0; ++i) {
      for (int j = 0; j < cols; ++j) {
        if (col_done[static_cast<std::size_t>(j)]) continue;
        if (sgn(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr < 0) break;
    std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pr)]);
    const Integer piv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)];
    for (int i = r + 1; i < rows; ++i) {
      auto& ai = a[static_cast<std::size_t>(i)];
      const auto& ar = a[static_cast<std::size_t>(r)];
      const Integer lead = ai[static_cast<std::size_t>(pc)];
      for (int j = 0; j < cols; ++j) {
        if (j == pc || col_done[static_cast<std::size_t>(j)]) continue;
        Integer num = ai[static_cast<std::size_t>(j)] * piv -
                      lead * ar[static_cast<std::size_t>(j)];
        // Bareiss: division by the previous pivot is exact
        mpz_divexact(ai[static_cast<std::size_t>(j)].get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
      ai[static_cast<std::size_t>(pc)] = 0;
    }
    col_done[static_cast<std::size_t>(pc)] = true;
    prev = piv;
    ++rank;
    ++r;
  }
  return rank;
}

std::vector<std::vector<Scalar>> kernel_basis(const QMatrix& m) {
  const int rows = m.rows;
  const int cols = m.cols;
  std::vector<std::vector<Scalar>> a(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    a[static_cast<std::size_t>(i)].assign(
        m.entries.begin() + static_cast<std::ptrdiff_t>(i) * cols,
        m.entries.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols);
  }

  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (sgn(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pr)]);
    const Scalar inv = Scalar(1) / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (int j = c; j < cols; ++j) {
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Scalar f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (sgn(f) == 0) continue;
      for (int j = c; j < cols; ++j) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<Scalar>> basis;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[static_cast<std::size_t>(fc)]) continue;
    std::vector<Scalar> x(static_cast<std::size_t>(cols), Scalar(0));
    x[static_cast<std::size_t>(fc)] = Scalar(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      x[static_cast<std::size_t>(pivot_cols[k])] =
          -a[k][static_cast<std::size_t>(fc)];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

bool RankAccumulator::add(const std::vector<Scalar>& v) {
  if (!echelon_.empty()) {
    FREEALG_CHECK(echelon_.begin()->second.size() == v.size(),
                  "RankAccumulator: inconsistent vector length");
  }
  std::vector<Scalar> w = v;
  for (const auto& [pc, row] : echelon_) {
    const Scalar f = w[static_cast<std::size_t>(pc)];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < w.size(); ++j) {
      w[j] -= f * row[j];
    }
  }
  int pivot = -1;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (sgn(w[j]) != 0) {
      pivot = static_cast<int>(j);
      break;
    }
  }
  if (pivot < 0) return false;
  const Scalar inv = Scalar(1) / w[static_cast<std::size_t>(pivot)];
  for (auto& x : w) x *= inv;
  echelon_.emplace(pivot, std::move(w));
  return true;
}

}  // namespace freealg
