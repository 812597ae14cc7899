#include "freealg/text.hpp"

#include <cctype>
#include <utility>

#include "freealg/errors.hpp"

namespace freealg {

namespace {

std::string describe(std::size_t position,
                     const std::vector<std::string>& expected,
                     const std::string& detail) {
  std::string msg = "syntax error at position " + std::to_string(position);
  if (!detail.empty()) {
    msg += ": " + detail;
  } else if (!expected.empty()) {
    msg += ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += expected.size() == 2 ? " or " : ", ";
      msg += "\"" + expected[i] + "\"";
    }
  }
  return msg;
}

class Parser {
 public:
  Parser(const std::string& text, int arity) : text_(text), arity_(arity) {}

  NCPoly run() {
    NCPoly result = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(pos_, {"+", "-", "end of input"});
    }
    return result;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void require(char c, const char* token) {
    if (!consume(c)) throw ParseError(pos_, {token});
  }

  bool digit_ahead() {
    return std::isdigit(static_cast<unsigned char>(peek())) != 0;
  }

  // digits immediately at pos_ (no whitespace skip)
  Integer raw_nat(const char* token) {
    if (pos_ == text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError(pos_, {token});
    }
    std::string digits;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_++];
    }
    return Integer(digits);
  }

  Integer nat(const char* token) {
    skip_ws();
    return raw_nat(token);
  }

  NCPoly parse_expr() {
    skip_ws();
    bool negate = false;
    if (consume('+')) {
      negate = false;
    } else if (consume('-')) {
      negate = true;
    }
    NCPoly acc = parse_term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (consume('+')) {
        acc += parse_term();
      } else if (consume('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  NCPoly parse_term() {
    skip_ws();
    if (!digit_ahead()) return parse_products(parse_factor(true));
    const Integer num = nat("number");
    Integer den(1);
    if (consume('/')) {
      const std::size_t den_pos = pos_;
      den = nat("number");
      if (sgn(den) == 0) throw ParseError(den_pos, {}, "zero denominator");
    }
    const Scalar coef = make_scalar(num, den);
    skip_ws();
    if (consume('*') || factor_ahead()) {
      return parse_products(parse_factor(false)) * coef;
    }
    return NCPoly::constant(arity_, coef);
  }

  NCPoly parse_products(NCPoly acc) {
    for (;;) {
      skip_ws();
      if (!consume('*')) return acc;
      acc = acc * parse_factor(false);
    }
  }

  bool factor_ahead() {
    const char c = peek();
    return c == 'x' || c == 'y' || c == '[' || c == '(';
  }

  NCPoly parse_factor(bool term_start) {
    skip_ws();
    NCPoly base = parse_primary(term_start);
    for (;;) {
      skip_ws();
      if (!consume('^')) return base;
      const std::size_t exp_pos = pos_;
      const Integer e = nat("exponent");
      if (!e.fits_uint_p() || e.get_ui() > 64) {
        throw ParseError(exp_pos, {}, "exponent too large");
      }
      NCPoly p = NCPoly::constant(arity_, Scalar(1));
      for (unsigned long i = 0; i < e.get_ui(); ++i) p = p * base;
      base = p;
    }
  }

  NCPoly parse_primary(bool term_start) {
    skip_ws();
    if (consume('x')) {
      const std::size_t idx_pos = pos_;
      const Integer idx = raw_nat("generator index");
      if (sgn(idx) == 0) throw ParseError(idx_pos, {}, "generator index 0");
      if (!idx.fits_sint_p() || static_cast<int>(idx.get_si()) > arity_) {
        throw ParseError(idx_pos, {},
                         "generator index exceeds arity " +
                             std::to_string(arity_));
      }
      return NCPoly::generator(arity_, static_cast<int>(idx.get_si()));
    }
    if (consume('y')) {
      return NCPoly::monomial(arity_, Word{kLetterY});
    }
    if (consume('[')) {
      NCPoly a = parse_expr();
      require(',', ",");
      NCPoly b = parse_expr();
      require(']', "]");
      return a * b - b * a;
    }
    if (consume('(')) {
      NCPoly inner = parse_expr();
      require(')', ")");
      return inner;
    }
    std::vector<std::string> expected;
    if (term_start) expected.push_back("number");
    expected.insert(expected.end(), {"x", "y", "[", "("});
    throw ParseError(pos_, std::move(expected));
  }

  const std::string& text_;
  int arity_;
  std::size_t pos_ = 0;
};

void append_word(std::string& out, const Word& w) {
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t run = i + 1;
    while (run < w.size() && w[run] == w[i]) ++run;
    if (i > 0) out += "*";
    out += letter_name(w[i]);
    if (run - i > 1) out += "^" + std::to_string(run - i);
    i = run;
  }
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& detail)
    : std::runtime_error(describe(position, expected, detail)),
      position_(position),
      expected_(std::move(expected)) {}

NCPoly parse_expression(const std::string& text, int arity) {
  FREEALG_REQUIRE(arity >= 0, "parse_expression needs arity >= 0");
  return Parser(text, arity).run();
}

std::string format_expression(const NCPoly& f) {
  FREEALG_REQUIRE(f.aux_dim() == 0,
                  "format_expression needs a plain element");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    const Scalar coef = c.constant_value();
    const bool negative = sgn(coef) < 0;
    const Scalar mag = negative ? Scalar(-coef) : coef;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (w.empty()) {
      out += scalar_to_string(mag);
    } else if (mag == Scalar(1)) {
      append_word(out, w);
    } else {
      out += scalar_to_string(mag) + "*";
      append_word(out, w);
    }
  }
  return out;
}

}  // namespace freealg
