#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "freealg/coefpoly.hpp"
#include "freealg/letter.hpp"

namespace freealg {

// Finite CoefPoly-coefficient combination of words, tagged with its arity n
// (active letters x_1..x_n may occur) and the auxiliary dimension k shared by
// all coefficients. No zero coefficient is ever stored; term iteration
// follows the canonical word order.
class NCPoly {
 public:
  explicit NCPoly(int arity = 0, int aux_dim = 0);
  static NCPoly constant(int arity, const Scalar& c);
  static NCPoly generator(int arity, int index);
  static NCPoly monomial(int arity, const Word& w);
  static NCPoly monomial(int arity, const Word& w, const Scalar& c);

  int arity() const { return arity_; }
  int aux_dim() const { return aux_dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int max_degree() const;  // 0 for the zero polynomial
  bool is_homogeneous(int* degree_out = nullptr) const;

  void add_term(const Word& w, const CoefPoly& c);
  void add_term(const Word& w, const Scalar& c);

  const std::map<Word, CoefPoly, WordLess>& terms() const { return terms_; }
  CoefPoly coefficient(const Word& w) const;
  Scalar scalar_coefficient(const Word& w) const;

  NCPoly with_arity(int arity) const;   // upward only
  NCPoly with_aux_dim(int k) const;     // upward only
  NCPoly homogeneous_component(int d) const;
  NCPoly truncated(int max_deg) const;

  bool has_param_letters() const;
  bool has_y() const;
  int max_param_index() const;  // 0 when no param letter occurs
  Scalar constant_term() const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator-() const;
  NCPoly& operator*=(const Scalar& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
  friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
  bool operator==(const NCPoly& o) const;

  std::string to_string() const;

 private:
  void check_word(const Word& w) const;

  int arity_ = 0;
  int aux_dim_ = 0;
  std::map<Word, CoefPoly, WordLess> terms_;
};

// Bilinear extension of word concatenation; coefficients multiply in the
// commutative auxiliary ring. Arities and auxiliary dimensions must match.
NCPoly nc_mul(const NCPoly& f, const NCPoly& g);
inline NCPoly operator*(const NCPoly& f, const NCPoly& g) {
  return nc_mul(f, g);
}

// One linear image per active letter: a list of (coefficient, target letter)
// pairs, or the empty list for the zero image. This is the single mechanism
// behind every operator substitution. Param letters and y map to themselves
// unless an explicit param image is installed.
using LinearImage = std::vector<std::pair<CoefPoly, Letter>>;

class LinearSubstitution {
 public:
  LinearSubstitution(int source_arity, int target_arity, int target_aux_dim = 0);

  int source_arity() const { return source_arity_; }
  int target_arity() const { return target_arity_; }
  int target_aux_dim() const { return target_aux_dim_; }

  void set_image(int slot, LinearImage image);  // slot in 1..source_arity
  void map_to_zero(int slot);
  void map_to_letter(int slot, Letter l);
  void add_image_term(int slot, const CoefPoly& c, Letter l);
  void add_image_term(int slot, const Scalar& c, Letter l);
  void set_param_image(Letter p, LinearImage image);

  const LinearImage& image(int slot) const;
  const LinearImage* param_image(Letter p) const;  // null when defaulted

 private:
  int source_arity_;
  int target_arity_;
  int target_aux_dim_;
  std::vector<LinearImage> images_;
  std::map<Letter, LinearImage> param_images_;
};

// The algebra homomorphism extending the substitution on letters.
NCPoly substitute(const NCPoly& f, const LinearSubstitution& sub);

namespace detail {
// Substitution variant that drops coefficient monomials as soon as some eps
// exponent reaches 2; valid only when the result feeds eps_coefficient.
NCPoly substitute_eps_capped(const NCPoly& f, const LinearSubstitution& sub);
}  // namespace detail

// Words in which every active letter 1..arity occurs exactly once and no
// param letter occurs.
NCPoly multilinear_part(const NCPoly& f);

// Coefficient of eps_1*...*eps_k across all terms; t variables remain.
NCPoly eps_coefficient(const NCPoly& f);

// Integrate every coefficient over the standard simplex; result has k = 0.
NCPoly simplex_integrate(const NCPoly& f);

}  // namespace freealg
