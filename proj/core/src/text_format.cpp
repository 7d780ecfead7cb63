#include "jetmult/text_format.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace jetmult {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      detail_(what),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) {
      fail("empty polynomial");
    }
    Polynomial out;
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      advance();
      skip_space();
    }
    add_term(out, negate);
    skip_space();
    while (!at_end()) {
      char op = peek();
      if (op != '+' && op != '-') {
        fail(std::string("expected '+' or '-', found '") + op + "'");
      }
      advance();
      skip_space();
      add_term(out, op == '-');
      skip_space();
    }
    return out;
  }

 private:
  void add_term(Polynomial& out, bool negate) {
    Rational coeff(1);
    std::vector<Monomial::Entry> factors;
    if (at_end()) {
      fail("expected a term");
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      skip_space();
      if (at_end() || peek() != '*') {
        out.add_term(negate ? Rational(-coeff) : coeff, Monomial{});
        return;
      }
      advance();
      skip_space();
    }
    factors.push_back(factor());
    skip_space();
    while (!at_end() && peek() == '*') {
      advance();
      skip_space();
      factors.push_back(factor());
      skip_space();
    }
    out.add_term(negate ? Rational(-coeff) : coeff, Monomial(std::move(factors)));
  }

  Monomial::Entry factor() {
    if (at_end() || peek() != 'x') {
      fail("expected a variable of the form x<base>_<order>");
    }
    advance();
    auto base_line = line_;
    auto base_col = column_;
    auto base = integer("variable base");
    if (base == 0) {
      throw ParseError("variable base must be at least 1", base_line, base_col);
    }
    if (at_end() || peek() != '_') {
      fail("expected '_' after variable base");
    }
    advance();
    auto order = integer("variable order");
    std::uint32_t exponent = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      advance();
      skip_space();
      auto exp_line = line_;
      auto exp_col = column_;
      auto e = integer("exponent");
      if (e < 1) {
        throw ParseError("exponent must be at least 1", exp_line, exp_col);
      }
      exponent = e;
    }
    return {JetVar(base, order), exponent};
  }

  Rational rational() {
    auto num = digits("coefficient");
    Integer den(1);
    skip_space();
    if (!at_end() && peek() == '/') {
      advance();
      skip_space();
      auto den_line = line_;
      auto den_col = column_;
      den = digits("denominator");
      if (den == 0) {
        throw ParseError("zero denominator", den_line, den_col);
      }
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Integer digits(const char* what) {
    std::string text;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      text.push_back(peek());
      advance();
    }
    if (text.empty()) {
      fail(std::string("expected ") + what);
    }
    return Integer(text);
  }

  std::uint32_t integer(const char* what) {
    auto line = line_;
    auto col = column_;
    Integer v = digits(what);
    if (v > std::numeric_limits<std::uint32_t>::max()) {
      throw ParseError(std::string(what) + " out of range", line, col);
    }
    return static_cast<std::uint32_t>(v.get_ui());
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      advance();
    }
  }

  [[nodiscard]] bool at_end() const { return pos_ >= src_.size(); }
  [[nodiscard]] char peek() const { return src_[pos_]; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

Polynomial parse_polynomial(std::string_view src) {
  return Parser(src).parse();
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

std::string to_string(const Monomial& mono) {
  if (mono.is_one()) {
    return "1";
  }
  std::string out;
  for (const auto& [var, exp] : mono.entries()) {
    if (!out.empty()) {
      out += '*';
    }
    out += to_string(var);
    if (exp != 1) {
      out += '^';
      out += std::to_string(exp);
    }
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    bool negative = sgn(coeff) < 0;
    if (first) {
      if (negative) {
        out += '-';
      }
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational magnitude = abs(coeff);
    if (mono.is_one()) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) {
        out += to_string(magnitude);
        out += '*';
      }
      out += to_string(mono);
    }
  }
  return out;
}

}  // namespace jetmult
