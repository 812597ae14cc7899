#pragma once

#include <stdexcept>
#include <string>

namespace freealg {

// Violation of a mathematical precondition (bad input to an operator, e.g. a
// non-invariant polynomial where translation invariance is required).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace freealg

#define FREEALG_CHECK(cond, msg)                                          \
  do {                                                                    \
    if (!(cond))                                                          \
      throw ::freealg::InternalError(std::string(msg) + " [" #cond "]");  \
  } while (0)

#define FREEALG_REQUIRE(cond, msg)                  \
  do {                                              \
    if (!(cond)) throw ::freealg::DomainError(msg); \
  } while (0)
