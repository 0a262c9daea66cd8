#include <cctype>
#include <limits>

#include "ybx/errors.hpp"
#include "ybx/scalars/param_scalar.hpp"

namespace ybx {

namespace {

// expr    := term (('+' | '-') term)*
// term    := unary (('*' | '/') unary)*
// unary   := ('+' | '-') unary | power
// power   := primary ('^' ['-'] integer)?
// primary := number | identifier | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParamScalar parse() {
    skip_space();
    if (at_end()) throw ParseError("empty scalar expression", pos_);
    ParamScalar value = expr();
    skip_space();
    if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return value;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParamScalar expr() {
    ParamScalar value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  ParamScalar term() {
    ParamScalar value = unary();
    while (true) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        ParamScalar divisor = unary();
        if (divisor.is_zero()) throw MalformedScalar("division by zero at offset " + std::to_string(at));
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  ParamScalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ParamScalar power() {
    ParamScalar base = primary();
    if (!accept('^')) return base;
    skip_space();
    const bool negative = accept('-');
    skip_space();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", pos_);
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) throw ParseError("exponent too large", start);
    const auto exp = static_cast<std::uint32_t>(std::stoul(digits));
    ParamScalar result = 1;
    for (std::uint32_t i = 0; i < exp; ++i) result *= base;
    if (negative) {
      if (result.is_zero()) throw MalformedScalar("negative power of zero");
      result = result.reciprocal();
    }
    return result;
  }

  ParamScalar primary() {
    skip_space();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ParamScalar inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      std::string digits(text_.substr(start, pos_ - start));
      std::size_t scale = 0;
      if (peek() == '.') {
        ++pos_;
        const std::size_t frac = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (frac == pos_) throw ParseError("expected digits after '.'", pos_);
        digits += text_.substr(frac, pos_ - frac);
        scale = pos_ - frac;
      }
      Ratio value(mpz_class(digits, 10), 1);
      if (scale > 0) {
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
        value = Ratio(mpz_class(digits, 10), den);
        value.canonicalize();
      }
      return ParamScalar(value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      return ParamScalar::indeterminate(std::string(text_.substr(start, pos_ - start)));
    }
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamScalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace ybx
