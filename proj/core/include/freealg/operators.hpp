#pragma once

#include <vector>

#include "freealg/ncpoly.hpp"

namespace freealg {

// The fixed sign and normalization conventions every operator follows;
// printed verbatim by the CLI and the README.
const char* conventions_text();

// All permutations of {1..m} in lexicographic order.
std::vector<std::vector<int>> permutations(int m);
int permutation_sign(const std::vector<int>& p);

// Simplicial differential, arity n -> n+1:
//   (delta f)(x_1..x_{n+1}) = sum_{i=1}^{n+1} (-1)^{i-1} f(.., omit slot i, ..)
NCPoly delta(const NCPoly& f);

// Retraction, arity n+1 -> n: (s f)(x_1..x_n) = f(0, x_1, .., x_n).
NCPoly s_retract(const NCPoly& f);

// Translation defect: f(x_1+y, .., x_n+y) - f(x_1, .., x_n). Zero exactly on
// translation-invariant polynomials.
NCPoly tau_defect(const NCPoly& f);

// Difference embedding, arity m -> m+1: x_i -> x_{i+1} - x_i. The image is
// translation-invariant.
NCPoly r_embed(const NCPoly& g);

// Left inverse of r_embed on translation-invariant inputs, arity m+1 -> m:
//   g(x_1..x_m) = f(0, x_1, x_1+x_2, .., x_1+..+x_m).
NCPoly r_invert(const NCPoly& f);

// Eilenberg-MacLane differential, arity m -> m+1:
//   (delta_A g)(x_1..x_{m+1}) = g(x_2..x_{m+1})
//     + sum_{i=1}^{m} (-1)^i g(x_1, .., x_i + x_{i+1}, .., x_{m+1})
//     + (-1)^{m+1} g(x_1..x_m)
NCPoly delta_A(const NCPoly& g);

// Antisymmetrization projector:
//   ant(g) = (1/m!) sum_{sigma} sgn(sigma) sigma(multilinear_part(g)).
NCPoly ant(const NCPoly& g);

// A_m = sum_{sigma} sgn(sigma) x_{sigma(1)} ... x_{sigma(m)}.
NCPoly antisymmetrizer(int m);

// Projector P_n, arity n -> n. With x(t) = x_1 + sum t_i (x_{i+1} - x_1):
// for each permutation sigma of {2..n} substitute slot 1 -> x(t) and slot j
// -> x(t) + eps_{j-1} (x_{sigma(j)} - x_1), sum with sgn(sigma), take the
// eps_1..eps_{n-1} coefficient and integrate over the simplex. P_1 = Id.
NCPoly p_project(const NCPoly& f);

// Guichardet homotopy, arity n+1 -> n, defined inductively with G^1 = G^2 = 0:
// phi(w_1..w_n) = f(p, p+w_1, .., p+w_n) with a fresh inert param p, then
// (Id - P - delta G^n) phi evaluated at w_1 = 0, w_j = x_j - x_1, p = x_1.
// Satisfies G delta + delta G = Id - P.
NCPoly g_homotopy(const NCPoly& f);

// Homotopy on the Eilenberg-MacLane side, arity m -> m-1:
// g_a = r_invert . g_homotopy . r_embed, with the translation-invariance of
// the middle stage asserted. Satisfies g_a delta_A + delta_A g_a = Id - ant.
NCPoly g_a(const NCPoly& g);

// Direct transcriptions of the order-3 and order-4 closed formulas for the
// homotopy. Order 3 agrees with g_homotopy everywhere; order 4 is kept as a
// diagnostic (see g4_diagnostic).
NCPoly g_closed_form(int order, const NCPoly& f);

// Compares g_closed_form(4, .) with g_homotopy on the full arity-4 word basis
// of degree d and reports agreement per basis word.
struct G4Diagnostic {
  int degree = 0;
  int total = 0;
  int matching = 0;
  std::vector<Word> mismatches;
};
G4Diagnostic g4_diagnostic(int degree);

}  // namespace freealg
