#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jetmult/ordering.hpp"
#include "jetmult/polynomial.hpp"

namespace jetmult::oracle {

struct GroebnerBasis {
  MonomialOrdering ordering;
  /// Monic elements sorted by increasing leading monomial.
  std::vector<Polynomial> basis;
  bool reduced = false;
  /// Variables of the ambient polynomial ring, ascending.
  std::vector<JetVar> variables;

  [[nodiscard]] std::vector<Monomial> leading_monomials() const;
};

/// Leading monomial of a nonzero polynomial under `ord`.
Monomial leading_monomial(const Polynomial& p, MonomialOrdering ord);

/// Reduced Gröbner basis of the ideal generated by `gens`. The ring is
/// generated by the variables of `gens` together with `extra_variables`.
/// Throws std::invalid_argument if every generator is zero.
GroebnerBasis buchberger(std::span<const Polynomial> gens, MonomialOrdering ord = MonomialOrdering::degrevlex(),
                         std::span<const JetVar> extra_variables = {});

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

/// Dimension of the quotient ring as a vector space: the number of standard
/// monomials, or nullopt if it is infinite.
std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& g);

}  // namespace jetmult::oracle
