#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freealg/errors.hpp"

namespace freealg {

// A letter of the noncommutative alphabet, packed into one integer:
//   active generator x_i -> +i        (i >= 1)
//   translation letter y -> -1
//   inert parameter p_k  -> -(k + 1)  (1 <= k <= 9)
// Canonical alphabet order: x_1 < x_2 < ... < p_1 < ... < p_9 < y.
using Letter = std::int32_t;

constexpr Letter kLetterY = -1;
constexpr int kMaxParams = 9;

inline bool is_active(Letter l) { return l >= 1; }
inline bool is_y(Letter l) { return l == kLetterY; }
inline bool is_param(Letter l) { return l <= -2; }

inline Letter active(int index) {
  FREEALG_CHECK(index >= 1, "active letter index must be positive");
  return index;
}

inline Letter param(int k) {
  FREEALG_CHECK(k >= 1 && k <= kMaxParams, "param letter index out of range");
  return -(k + 1);
}

inline int active_index(Letter l) {
  FREEALG_CHECK(is_active(l), "not an active letter");
  return l;
}

inline int param_index(Letter l) {
  FREEALG_CHECK(is_param(l), "not a param letter");
  return -l - 1;
}

inline int letter_rank(Letter l) {
  if (is_active(l)) return l;
  if (is_param(l)) return 1'000'000 + param_index(l);
  return 2'000'000;
}

inline std::string letter_name(Letter l) {
  if (is_active(l)) return "x" + std::to_string(active_index(l));
  if (is_y(l)) return "y";
  return "p" + std::to_string(param_index(l));
}

// Noncommutative monomial: a finite sequence of letters. Empty = unit.
using Word = std::vector<Letter>;

// Canonical term order: degree first, then lexicographic in the alphabet
// order above.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
    }
    return false;
  }
};

inline std::string word_name(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += letter_name(w[i]);
  }
  return s;
}

}  // namespace freealg
