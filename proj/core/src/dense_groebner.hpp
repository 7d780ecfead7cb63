#pragma once

// Dense-exponent Buchberger engine shared by the public Gröbner API and the
// local-length oracle. Variables are indexed 0..n-1 in decreasing precedence.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jetmult/ordering.hpp"
#include "jetmult/polynomial.hpp"

namespace jetmult::detail {

/// exps[0] is the total degree, exps[1..n] the per-variable exponents.
using Exponents = std::vector<std::uint32_t>;

struct DenseTerm {
  Rational coeff;
  Exponents exps;
};

/// Terms sorted strictly decreasing under the ring's ordering.
using DensePoly = std::vector<DenseTerm>;

class DenseRing {
 public:
  DenseRing(std::vector<JetVar> vars, MonomialOrdering ord);

  [[nodiscard]] std::size_t nvars() const noexcept { return vars_.size(); }
  [[nodiscard]] const std::vector<JetVar>& vars() const noexcept { return vars_; }
  [[nodiscard]] MonomialOrdering ordering() const noexcept { return ord_; }

  /// Negative, zero or positive as a is less than, equal to or greater than b.
  [[nodiscard]] int compare(const Exponents& a, const Exponents& b) const noexcept;

  [[nodiscard]] DensePoly from(const Polynomial& p) const;
  [[nodiscard]] Polynomial to(const DensePoly& p) const;
  [[nodiscard]] Exponents one() const { return Exponents(nvars() + 1, 0); }

 private:
  std::vector<JetVar> vars_;
  MonomialOrdering ord_;
};

bool divides(const Exponents& a, const Exponents& b) noexcept;

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t chain_skips = 0;
  std::size_t zero_reductions = 0;
};

/// Full reduction of p modulo `basis` (elements monic, leading term first).
DensePoly normal_form(const DenseRing& ring, DensePoly p, const std::vector<DensePoly>& basis);

/// Reduced Gröbner basis, monic, sorted by increasing leading monomial.
std::vector<DensePoly> buchberger(const DenseRing& ring, std::vector<DensePoly> gens,
                                  BuchbergerStats* stats = nullptr);

/// Number of monomials divisible by none of `leading`; nullopt when some
/// variable has no pure power among them.
std::optional<std::uint64_t> count_standard_monomials(const DenseRing& ring, const std::vector<Exponents>& leading);

/// Every monomial of total degree `degree`, as single-term polynomials.
std::vector<DensePoly> monomials_of_degree(const DenseRing& ring, std::uint32_t degree);

}  // namespace jetmult::detail
