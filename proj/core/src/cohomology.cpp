#include "freealg/cohomology.hpp"

#include <utility>

#include "freealg/detail/parallel.hpp"
#include "freealg/errors.hpp"
#include "freealg/lie.hpp"
#include "freealg/operators.hpp"

namespace freealg {

std::vector<Word> word_basis(int n, int d) {
  FREEALG_REQUIRE(n >= 1 && d >= 0, "word basis needs n >= 1 and d >= 0");
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(d), active(1));
  for (;;) {
    out.push_back(w);
    int pos = d;
    while (pos > 0 && active_index(w[static_cast<std::size_t>(pos - 1)]) == n) {
      w[static_cast<std::size_t>(pos - 1)] = active(1);
      --pos;
    }
    if (pos == 0) break;
    w[static_cast<std::size_t>(pos - 1)] =
        active(active_index(w[static_cast<std::size_t>(pos - 1)]) + 1);
  }
  return out;
}

std::size_t word_index(int n, const Word& w) {
  std::size_t idx = 0;
  for (const Letter& l : w) {
    FREEALG_CHECK(is_active(l) && active_index(l) <= n,
                  "word_index: letter outside x1..xn");
    idx = idx * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(active_index(l) - 1);
  }
  return idx;
}

std::vector<Scalar> word_coordinates(const NCPoly& f, int n, int d) {
  std::size_t dim = 1;
  for (int i = 0; i < d; ++i) dim *= static_cast<std::size_t>(n);
  std::vector<Scalar> coords(dim, Scalar(0));
  for (const auto& [w, c] : f.terms()) {
    FREEALG_REQUIRE(static_cast<int>(w.size()) == d,
                    "word_coordinates: element is not homogeneous of the requested degree");
    coords[word_index(n, w)] = c.constant_value();
  }
  return coords;
}

namespace {

long long assoc_dimension(int n, int d) {
  long long dim = 1;
  for (int i = 0; i < d; ++i) dim *= n;
  return dim;
}

QMatrix assoc_matrix(int n, int d) {
  const auto source = word_basis(n, d);
  const long long target_dim = assoc_dimension(n + 1, d);
  QMatrix m(static_cast<int>(target_dim), static_cast<int>(source.size()));
  for (std::size_t j = 0; j < source.size(); ++j) {
    const NCPoly image = delta_A(NCPoly::monomial(n, source[j]));
    for (const auto& [w, c] : image.terms()) {
      m.at(static_cast<int>(word_index(n + 1, w)), static_cast<int>(j)) =
          c.constant_value();
    }
  }
  return m;
}

QMatrix lie_matrix(int n, int d) {
  const LyndonBasis source = lyndon_basis(n, d);
  const LyndonBasis target = lyndon_basis(n + 1, d);
  QMatrix m(static_cast<int>(target.elements.size()),
            static_cast<int>(source.elements.size()));
  for (std::size_t j = 0; j < source.elements.size(); ++j) {
    const auto col = lie_coordinates(delta_A(source.elements[j]), target);
    for (std::size_t i = 0; i < col.size(); ++i) {
      m.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
    }
  }
  return m;
}

NCPoly vector_to_element(Algebra alg, int n, int d,
                         const std::vector<Scalar>& v) {
  NCPoly out = NCPoly::constant(n, Scalar(0));
  if (alg == Algebra::Assoc) {
    const auto basis = word_basis(n, d);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) != 0) out.add_term(basis[i], v[i]);
    }
  } else {
    const LyndonBasis basis = lyndon_basis(n, d);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) != 0) out += basis.elements[i] * v[i];
    }
  }
  return out;
}

}  // namespace

QMatrix operator_matrix(Algebra alg, int n, int d) {
  FREEALG_REQUIRE(n >= 1 && d >= 1, "operator matrix needs n >= 1 and d >= 1");
  return alg == Algebra::Assoc ? assoc_matrix(n, d) : lie_matrix(n, d);
}

std::vector<BettiEntry> betti_table(Algebra alg, int n_max, int d_max,
                                    bool with_generators, int threads) {
  FREEALG_REQUIRE(n_max >= 1 && d_max >= 1,
                  "betti table needs n_max >= 1 and d_max >= 1");
  const int cells = n_max * d_max;
  std::vector<QMatrix> matrices(static_cast<std::size_t>(cells));
  std::vector<int> ranks(static_cast<std::size_t>(cells), 0);
  const auto cell = [d_max](int n, int d) {
    return static_cast<std::size_t>((n - 1) * d_max + (d - 1));
  };

  detail::parallel_for(cells, threads, [&](int i) {
    const int n = i / d_max + 1;
    const int d = i % d_max + 1;
    QMatrix m = operator_matrix(alg, n, d);
    ranks[static_cast<std::size_t>(i)] = exact_rank(m);
    matrices[static_cast<std::size_t>(i)] = std::move(m);
  });

  std::vector<BettiEntry> table(static_cast<std::size_t>(cells));
  for (int n = 1; n <= n_max; ++n) {
    for (int d = 1; d <= d_max; ++d) {
      BettiEntry e;
      e.n = n;
      e.d = d;
      e.dim = alg == Algebra::Assoc ? assoc_dimension(n, d)
                                    : witt_dimension(n, d);
      e.rank_out = ranks[cell(n, d)];
      e.rank_in = n == 1 ? 0 : ranks[cell(n - 1, d)];
      e.betti = e.dim - e.rank_out - e.rank_in;
      table[cell(n, d)] = std::move(e);
    }
  }

  if (with_generators) {
    detail::parallel_for(cells, threads, [&](int i) {
      BettiEntry& e = table[static_cast<std::size_t>(i)];
      if (e.betti <= 0) return;
      RankAccumulator image;
      if (e.n > 1) {
        const QMatrix& in = matrices[cell(e.n - 1, e.d)];
        for (int j = 0; j < in.cols; ++j) {
          std::vector<Scalar> col(static_cast<std::size_t>(in.rows));
          for (int r = 0; r < in.rows; ++r) col[static_cast<std::size_t>(r)] = in.at(r, j);
          image.add(col);
        }
      }
      for (auto& v : kernel_basis(matrices[cell(e.n, e.d)])) {
        if (!image.add(v)) continue;
        Scalar lead(0);
        for (const auto& x : v) {
          if (sgn(x) != 0) {
            lead = x;
            break;
          }
        }
        for (auto& x : v) x /= lead;
        e.generators.push_back(vector_to_element(alg, e.n, e.d, v));
      }
      FREEALG_CHECK(static_cast<long long>(e.generators.size()) == e.betti,
                    "generator count does not match betti number");
    });
  }
  return table;
}

}  // namespace freealg
