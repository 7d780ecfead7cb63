#pragma once

#include <cstddef>
#include <map>
#include <set>

#include <gmpxx.h>

#include "jetmult/monomial.hpp"
#include "jetmult/ordering.hpp"

namespace jetmult {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sparse multivariate polynomial over the rationals in JetVars.
///
/// Terms live in a map keyed by monomial in decreasing degrevlex order, which
/// is also the serialization order. Zero coefficients are never stored, so two
/// polynomials are equal exactly when their term maps are equal.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, DegrevlexDescending>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(JetVar v);
  static Polynomial term(const Rational& coeff, Monomial mono);

  [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] Rational coefficient(const Monomial& mono) const;
  [[nodiscard]] std::set<JetVar> variables() const;
  /// Highest total degree among terms; 0 for the zero polynomial.
  [[nodiscard]] std::uint64_t total_degree() const noexcept;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  /// Adds coeff * mono in place.
  void add_term(const Rational& coeff, const Monomial& mono);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, std::uint32_t exponent);

/// Partial assignment of JetVars to polynomials; unassigned variables map to
/// themselves.
using Assignment = std::map<JetVar, Polynomial>;

/// Applies the ring homomorphism defined by `assignment`.
Polynomial substitute(const Polynomial& p, const Assignment& assignment);

}  // namespace jetmult
