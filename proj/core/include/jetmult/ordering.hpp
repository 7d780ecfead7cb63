#pragma once

#include <compare>
#include <string_view>

#include "jetmult/monomial.hpp"

namespace jetmult {

/// A monomial order over JetVars. Variable precedence is fixed: smaller
/// JetVars (by base, then order) are larger variables, so x1_0 > x1_1 > x2_0.
struct MonomialOrdering {
  enum class Kind { degrevlex, lex };
  Kind kind = Kind::degrevlex;

  static constexpr MonomialOrdering degrevlex() { return {Kind::degrevlex}; }
  static constexpr MonomialOrdering lex() { return {Kind::lex}; }

  friend constexpr bool operator==(MonomialOrdering, MonomialOrdering) = default;
};

std::string_view to_string(MonomialOrdering::Kind kind);

std::strong_ordering compare_monomials(MonomialOrdering ord, const Monomial& u, const Monomial& v);

/// Map comparator placing the degrevlex-largest monomial first.
struct DegrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_monomials(MonomialOrdering::degrevlex(), a, b) == std::strong_ordering::greater;
  }
};

}  // namespace jetmult
