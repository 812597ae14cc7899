#include "freealg/coefpoly.hpp"

#include "freealg/errors.hpp"

namespace freealg {

namespace packed {

static void check_index(int i) {
  FREEALG_CHECK(i >= 1 && i <= kMaxAux, "auxiliary variable index out of range");
}

std::uint64_t t_key(int i) {
  check_index(i);
  return 1ULL << (4 * (i - 1));
}

std::uint64_t eps_key(int i) {
  check_index(i);
  return 1ULL << (32 + 4 * (i - 1));
}

std::uint64_t eps_ones(int k) {
  FREEALG_CHECK(k >= 0 && k <= kMaxAux, "auxiliary dimension out of range");
  std::uint64_t key = 0;
  for (int i = 1; i <= k; ++i) key |= eps_key(i);
  return key;
}

std::uint64_t mul_key(std::uint64_t a, std::uint64_t b) {
  std::uint64_t sum = a + b;
  FREEALG_CHECK(((sum ^ a ^ b) & 0x1111111111111110ULL) == 0 &&
                    (a >> 60) + (b >> 60) < 16,
                "auxiliary exponent overflow");
  return sum;
}

int t_exponent(std::uint64_t key, int i) {
  check_index(i);
  return static_cast<int>((key >> (4 * (i - 1))) & 0xF);
}

int eps_exponent(std::uint64_t key, int i) {
  check_index(i);
  return static_cast<int>((key >> (32 + 4 * (i - 1))) & 0xF);
}

}  // namespace packed

CoefPoly::CoefPoly(const Scalar& c, int aux_dim) : aux_dim_(aux_dim) {
  FREEALG_CHECK(aux_dim >= 0 && aux_dim <= packed::kMaxAux,
                "auxiliary dimension out of range");
  if (c != 0) terms_.emplace(0, c);
}

CoefPoly CoefPoly::t_var(int i, int aux_dim) {
  FREEALG_CHECK(i >= 1 && i <= aux_dim, "t variable index exceeds aux dimension");
  CoefPoly p(Scalar(0), aux_dim);
  p.terms_.emplace(packed::t_key(i), Scalar(1));
  return p;
}

CoefPoly CoefPoly::eps_var(int i, int aux_dim) {
  FREEALG_CHECK(i >= 1 && i <= aux_dim, "eps variable index exceeds aux dimension");
  CoefPoly p(Scalar(0), aux_dim);
  p.terms_.emplace(packed::eps_key(i), Scalar(1));
  return p;
}

bool CoefPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Scalar CoefPoly::constant_value() const {
  FREEALG_CHECK(is_constant(), "coefficient is not constant");
  return terms_.empty() ? Scalar(0) : terms_.begin()->second;
}

bool CoefPoly::has_eps() const {
  for (const auto& [key, c] : terms_) {
    if (key & packed::kEpsMask) return true;
  }
  return false;
}

CoefPoly CoefPoly::with_aux_dim(int k) const {
  FREEALG_CHECK(k >= aux_dim_ && k <= packed::kMaxAux,
                "auxiliary dimension may only grow");
  CoefPoly p = *this;
  p.aux_dim_ = k;
  return p;
}

void CoefPoly::add_term(std::uint64_t key, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CoefPoly& CoefPoly::operator+=(const CoefPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  FREEALG_CHECK(aux_dim_ == o.aux_dim_, "auxiliary dimension mismatch");
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

CoefPoly& CoefPoly::operator-=(const CoefPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = -o;
  FREEALG_CHECK(aux_dim_ == o.aux_dim_, "auxiliary dimension mismatch");
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

CoefPoly CoefPoly::operator-() const {
  CoefPoly p(Scalar(0), aux_dim_);
  for (const auto& [key, c] : terms_) p.terms_.emplace(key, -c);
  return p;
}

CoefPoly& CoefPoly::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

CoefPoly CoefPoly::mul_impl(const CoefPoly& a, const CoefPoly& b, bool eps_cap) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  FREEALG_CHECK(a.aux_dim_ == b.aux_dim_, "auxiliary dimension mismatch");
  CoefPoly p(Scalar(0), a.aux_dim_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      std::uint64_t key = packed::mul_key(ka, kb);
      if (eps_cap && !packed::eps_multilinear(key)) continue;
      p.add_term(key, ca * cb);
    }
  }
  return p;
}

CoefPoly operator*(const CoefPoly& a, const CoefPoly& b) {
  return CoefPoly::mul_impl(a, b, false);
}

CoefPoly CoefPoly::mul_eps_capped(const CoefPoly& a, const CoefPoly& b) {
  return mul_impl(a, b, true);
}

bool CoefPoly::operator==(const CoefPoly& o) const {
  if (is_zero() || o.is_zero()) return terms_ == o.terms_;
  return aux_dim_ == o.aux_dim_ && terms_ == o.terms_;
}

CoefPoly CoefPoly::eps_extract() const {
  const std::uint64_t ones = packed::eps_ones(aux_dim_);
  CoefPoly p(Scalar(0), aux_dim_);
  for (const auto& [key, c] : terms_) {
    if ((key & packed::kEpsMask) == ones) p.terms_.emplace(key & ~packed::kEpsMask, c);
  }
  return p;
}

Scalar CoefPoly::simplex_integral() const {
  Scalar total = 0;
  for (const auto& [key, c] : terms_) {
    FREEALG_REQUIRE((key & packed::kEpsMask) == 0,
                    "residual eps variables in simplex integration");
    Integer num = 1;
    unsigned exp_sum = 0;
    for (int i = 1; i <= aux_dim_; ++i) {
      unsigned a = static_cast<unsigned>(packed::t_exponent(key, i));
      num *= factorial(a);
      exp_sum += a;
    }
    total += c * make_scalar(num, factorial(static_cast<unsigned>(aux_dim_) + exp_sum));
  }
  return total;
}

std::string CoefPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += scalar_to_string(c);
    for (int i = 1; i <= aux_dim_; ++i) {
      int e = packed::t_exponent(key, i);
      if (e > 0) s += "*t" + std::to_string(i) + (e > 1 ? "^" + std::to_string(e) : "");
    }
    for (int i = 1; i <= aux_dim_; ++i) {
      int e = packed::eps_exponent(key, i);
      if (e > 0) s += "*e" + std::to_string(i) + (e > 1 ? "^" + std::to_string(e) : "");
    }
  }
  return s;
}

}  // namespace freealg
