#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "freealg/scalar.hpp"

namespace freealg {

// Commutative monomials in the auxiliary variables t_1..t_k, eps_1..eps_k are
// packed into one 64-bit key: nibble i holds the exponent of t_{i+1}, nibble
// 8+i the exponent of eps_{i+1}. Exponents are capped at 15 and k at 8.
namespace packed {

constexpr int kMaxAux = 8;
constexpr std::uint64_t kEpsMask = 0xFFFFFFFF00000000ULL;
// Bits that are set in an eps nibble exactly when its exponent is >= 2.
constexpr std::uint64_t kEpsHighBits = 0xEEEEEEEE00000000ULL;

std::uint64_t t_key(int i);
std::uint64_t eps_key(int i);
std::uint64_t eps_ones(int k);  // key of eps_1 * eps_2 * ... * eps_k
std::uint64_t mul_key(std::uint64_t a, std::uint64_t b);
int t_exponent(std::uint64_t key, int i);
int eps_exponent(std::uint64_t key, int i);

inline bool eps_multilinear(std::uint64_t key) {
  return (key & kEpsHighBits) == 0;
}

}  // namespace packed

// Commutative polynomial in t_1..t_k, eps_1..eps_k with Scalar coefficients;
// the coefficient ring of NCPoly. The auxiliary dimension k is carried
// explicitly; plain rational constants live at k = 0. The zero polynomial
// combines with any k.
class CoefPoly {
 public:
  CoefPoly() = default;
  explicit CoefPoly(const Scalar& c, int aux_dim = 0);
  static CoefPoly t_var(int i, int aux_dim);
  static CoefPoly eps_var(int i, int aux_dim);

  int aux_dim() const { return aux_dim_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;  // requires is_constant()
  bool has_eps() const;

  CoefPoly with_aux_dim(int k) const;  // upward promotion only

  void add_term(std::uint64_t key, const Scalar& c);

  CoefPoly& operator+=(const CoefPoly& o);
  CoefPoly& operator-=(const CoefPoly& o);
  CoefPoly operator-() const;
  CoefPoly& operator*=(const Scalar& c);
  friend CoefPoly operator+(CoefPoly a, const CoefPoly& b) { return a += b; }
  friend CoefPoly operator-(CoefPoly a, const CoefPoly& b) { return a -= b; }
  friend CoefPoly operator*(CoefPoly a, const Scalar& c) { return a *= c; }
  friend CoefPoly operator*(const CoefPoly& a, const CoefPoly& b);

  // Product discarding every monomial in which some eps exponent reaches 2.
  static CoefPoly mul_eps_capped(const CoefPoly& a, const CoefPoly& b);

  bool operator==(const CoefPoly& o) const;

  // Coefficient of eps_1*eps_2*...*eps_k (degree exactly one in every eps);
  // t variables are retained.
  CoefPoly eps_extract() const;

  // Exact integral over the standard simplex {t_i >= 0, sum t_i <= 1} in
  // dimension k. No eps variable may remain.
  Scalar simplex_integral() const;

  const std::map<std::uint64_t, Scalar>& terms() const { return terms_; }
  std::string to_string() const;

 private:
  static CoefPoly mul_impl(const CoefPoly& a, const CoefPoly& b, bool eps_cap);

  int aux_dim_ = 0;
  std::map<std::uint64_t, Scalar> terms_;
};

}  // namespace freealg
