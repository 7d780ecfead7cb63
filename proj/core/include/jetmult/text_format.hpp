#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jetmult/polynomial.hpp"

namespace jetmult {

/// Raised by parse_polynomial; line and column are 1-based.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

// Grammar (whitespace allowed between tokens):
//   variable := "x" int "_" int
//   factor   := variable ("^" int)?
//   term     := rational "*" factor ("*" factor)* | factor ("*" factor)* | rational
//   poly     := "-"? term (("+"|"-") term)*
//   rational := int ("/" int)?
// The bare-rational term and the optional leading sign let constants, "0"
// and negative leading coefficients round-trip.
Polynomial parse_polynomial(std::string_view src);

std::string to_string(const Rational& q);
std::string to_string(const Monomial& mono);
/// Canonical text: terms in decreasing degrevlex order, unit coefficients
/// omitted, " + " / " - " separators, "0" for the zero polynomial.
std::string to_string(const Polynomial& p);

}  // namespace jetmult
