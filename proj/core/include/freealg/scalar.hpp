#pragma once

#include <gmpxx.h>

#include <string>

namespace freealg {

// Exact rational scalar. mpq_class keeps results of arithmetic canonical
// (lowest terms, positive denominator), but a value built from a raw
// numerator/denominator pair is not canonicalized automatically, so
// construction goes through make_scalar.
using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar make_scalar(long num, long den = 1) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline Scalar make_scalar(const Integer& num, const Integer& den) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

// "p/q", with "/q" omitted when the denominator is 1.
inline std::string scalar_to_string(const Scalar& q) { return q.get_str(); }

}  // namespace freealg
