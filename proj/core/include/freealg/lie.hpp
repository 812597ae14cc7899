#pragma once

#include <vector>

#include "freealg/ncpoly.hpp"

namespace freealg {

// [a, b] = a*b - b*a.
NCPoly bracket_expand(const NCPoly& a, const NCPoly& b);

// Left-normed bracketing, extended linearly:
//   x_{i1} x_{i2} ... x_{id} -> [[..[[x_{i1}, x_{i2}], x_{i3}]..], x_{id}].
// Input must be homogeneous of degree >= 1 with no param letters.
NCPoly dynkin_map(const NCPoly& f);

// Dynkin-Specht-Wever criterion: f is a Lie element iff every homogeneous
// component f_d (d >= 1) satisfies dynkin_map(f_d) = d * f_d and the constant
// component vanishes.
bool is_lie(const NCPoly& f);

// (1/d) sum_{e | d} mu(d/e) n^e.
long long witt_dimension(int n, int d);

// All Lyndon words over {1..n} of length exactly d, lexicographic.
std::vector<Word> lyndon_words(int n, int d);

// Lyndon words of length exactly d with their standard-factorization
// bracketings; a basis of the degree-d component of the free Lie algebra.
// Expanding a bracketing yields its Lyndon word with coefficient 1 plus
// lexicographically larger words only.
struct LyndonBasis {
  int n = 0;
  int d = 0;
  std::vector<Word> words;       // lexicographic order
  std::vector<NCPoly> elements;  // matching standard bracketings
};
LyndonBasis lyndon_basis(int n, int d);

// Coordinates of a homogeneous Lie element in the basis, by elimination
// against leading words. Fails (DomainError) exactly when f is not in the
// span, so this doubles as a Lie membership check.
std::vector<Scalar> lie_coordinates(const NCPoly& f, const LyndonBasis& basis);

NCPoly from_lie_coordinates(const std::vector<Scalar>& coords,
                            const LyndonBasis& basis);

}  // namespace freealg
