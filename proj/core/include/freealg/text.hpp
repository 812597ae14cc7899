#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "freealg/ncpoly.hpp"

namespace freealg {

// Syntax error with the 0-based character position where parsing stopped and
// the tokens that would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& detail = "");

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

// Parses the expression grammar
//   expr     := ('+' | '-')? term (('+' | '-') term)*
//   term     := rational | (rational '*'?)? factor ('*' factor)*
//   factor   := gen | '[' expr ',' expr ']' | '(' expr ')' | factor '^' nat
//   gen      := 'x' nat | 'y'
//   rational := nat ('/' nat)?
// (whitespace-insensitive; brackets expand to commutators). Generators must
// satisfy 1 <= index <= arity.
NCPoly parse_expression(const std::string& text, int arity);

// Canonical text form: terms in the canonical order joined by " + " / " - ",
// coefficients as "p/q" ("/1" omitted, unit coefficients dropped), repeated
// letters collapsed to powers, the empty word printed as "1". Output parses
// back to an equal element.
std::string format_expression(const NCPoly& f);

}  // namespace freealg
