#include "freealg/lie.hpp"

#include <algorithm>
#include <map>

#include "freealg/errors.hpp"

namespace freealg {

NCPoly bracket_expand(const NCPoly& a, const NCPoly& b) {
  return nc_mul(a, b) - nc_mul(b, a);
}

NCPoly dynkin_map(const NCPoly& f) {
  FREEALG_REQUIRE(!f.has_param_letters() && !f.has_y(),
                  "dynkin_map: param letters present");
  int degree = 0;
  FREEALG_REQUIRE(f.is_homogeneous(&degree), "dynkin_map: input not homogeneous");
  FREEALG_REQUIRE(degree >= 1 || f.is_zero(), "dynkin_map: degree must be >= 1");
  NCPoly result(f.arity());
  for (const auto& [w, c] : f.terms()) {
    NCPoly bracketed = NCPoly::monomial(f.arity(), Word{w[0]});
    for (std::size_t i = 1; i < w.size(); ++i) {
      NCPoly letter_poly = NCPoly::monomial(f.arity(), Word{w[i]});
      bracketed = bracket_expand(bracketed, letter_poly);
    }
    result += bracketed * c.constant_value();
  }
  return result;
}

bool is_lie(const NCPoly& f) {
  if (f.constant_term() != 0) return false;
  for (int d = 1; d <= f.max_degree(); ++d) {
    NCPoly fd = f.homogeneous_component(d);
    if (fd.is_zero()) continue;
    if (!(dynkin_map(fd) == fd * Scalar(d))) return false;
  }
  return true;
}

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

long long int_pow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

long long witt_dimension(int n, int d) {
  FREEALG_CHECK(n >= 1 && d >= 1, "witt_dimension: bad arguments");
  long long sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e == 0) sum += moebius(d / e) * int_pow(n, e);
  }
  return sum / d;
}

std::vector<Word> lyndon_words(int n, int d) {
  // Duval's generation: in lexicographic order, extend periodically and
  // increment the last non-maximal letter. Words shorter than d are visited
  // but only length-d ones are emitted.
  std::vector<Word> out;
  if (d < 1) return out;
  std::vector<int> w{0};
  while (!w.empty()) {
    ++w.back();
    const std::size_t m = w.size();
    if (w.back() <= n && m == static_cast<std::size_t>(d)) {
      Word word(m);
      for (std::size_t i = 0; i < m; ++i) word[i] = active(w[i]);
      out.push_back(word);
    }
    while (w.size() < static_cast<std::size_t>(d)) {
      w.push_back(w[w.size() % m]);
    }
    while (!w.empty() && w.back() >= n) w.pop_back();
  }
  return out;
}

namespace {

// Standard factorization w = u v with v the lexicographically smallest
// proper suffix; bracketing b(w) = [b(u), b(v)].
NCPoly standard_bracketing(const Word& w, int arity,
                           std::map<Word, NCPoly, WordLess>& cache) {
  if (w.size() == 1) return NCPoly::monomial(arity, w);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  std::size_t split = 1;
  for (std::size_t i = 2; i < w.size(); ++i) {
    if (std::lexicographical_compare(w.begin() + static_cast<std::ptrdiff_t>(i),
                                     w.end(),
                                     w.begin() + static_cast<std::ptrdiff_t>(split),
                                     w.end()))
      split = i;
  }
  Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
  Word v(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
  NCPoly result = bracket_expand(standard_bracketing(u, arity, cache),
                                 standard_bracketing(v, arity, cache));
  cache.emplace(w, result);
  return result;
}

}  // namespace

LyndonBasis lyndon_basis(int n, int d) {
  FREEALG_CHECK(n >= 1 && d >= 1, "lyndon_basis: bad arguments");
  LyndonBasis basis;
  basis.n = n;
  basis.d = d;
  std::map<Word, NCPoly, WordLess> cache;
  for (const Word& w : lyndon_words(n, d)) {
    basis.words.push_back(w);
    basis.elements.push_back(standard_bracketing(w, n, cache));
  }
  FREEALG_CHECK(static_cast<long long>(basis.words.size()) == witt_dimension(n, d),
                "lyndon_basis: count disagrees with the Witt formula");
  return basis;
}

std::vector<Scalar> lie_coordinates(const NCPoly& f, const LyndonBasis& basis) {
  FREEALG_REQUIRE(f.arity() <= basis.n, "lie_coordinates: arity mismatch");
  int degree = 0;
  FREEALG_REQUIRE(f.is_homogeneous(&degree), "lie_coordinates: input not homogeneous");
  FREEALG_REQUIRE(f.is_zero() || degree == basis.d,
                  "lie_coordinates: degree mismatch");
  std::vector<Scalar> coords(basis.words.size(), Scalar(0));
  NCPoly work = f.with_arity(basis.n);
  while (!work.is_zero()) {
    const Word& lead = work.terms().begin()->first;
    auto it = std::lower_bound(basis.words.begin(), basis.words.end(), lead,
                               WordLess{});
    FREEALG_REQUIRE(it != basis.words.end() && *it == lead,
                    "lie_coordinates: input is not a Lie element (leading word " +
                        word_name(lead) + " is not Lyndon)");
    const std::size_t idx =
        static_cast<std::size_t>(it - basis.words.begin());
    const Scalar c = work.terms().begin()->second.constant_value();
    coords[idx] = c;
    work -= basis.elements[idx] * c;
  }
  return coords;
}

NCPoly from_lie_coordinates(const std::vector<Scalar>& coords,
                            const LyndonBasis& basis) {
  FREEALG_CHECK(coords.size() == basis.elements.size(),
                "from_lie_coordinates: size mismatch");
  NCPoly result(basis.n);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    result += basis.elements[i] * coords[i];
  }
  return result;
}

}  // namespace freealg
