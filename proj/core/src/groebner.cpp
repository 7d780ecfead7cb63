#include "jetmult/groebner.hpp"

#include <set>
#include <stdexcept>

#include "dense_groebner.hpp"

namespace jetmult::oracle {

Monomial leading_monomial(const Polynomial& p, MonomialOrdering ord) {
  if (p.is_zero()) {
    throw std::invalid_argument("leading_monomial of the zero polynomial");
  }
  const Monomial* best = nullptr;
  for (const auto& [mono, coeff] : p.terms()) {
    if (best == nullptr || compare_monomials(ord, mono, *best) == std::strong_ordering::greater) {
      best = &mono;
    }
  }
  return *best;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis.size());
  for (const auto& g : basis) {
    out.push_back(leading_monomial(g, ordering));
  }
  return out;
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, MonomialOrdering ord,
                         std::span<const JetVar> extra_variables) {
  std::set<JetVar> vars(extra_variables.begin(), extra_variables.end());
  for (const auto& g : gens) {
    auto v = g.variables();
    vars.insert(v.begin(), v.end());
  }
  const detail::DenseRing ring(std::vector<JetVar>(vars.begin(), vars.end()), ord);
  std::vector<detail::DensePoly> dense;
  dense.reserve(gens.size());
  for (const auto& g : gens) {
    dense.push_back(ring.from(g));
  }
  GroebnerBasis out{ord, {}, true, ring.vars()};
  for (const auto& g : detail::buchberger(ring, std::move(dense))) {
    out.basis.push_back(ring.to(g));
  }
  return out;
}

namespace {

detail::DenseRing ring_for(const GroebnerBasis& g, const Polynomial& p) {
  std::set<JetVar> vars(g.variables.begin(), g.variables.end());
  for (const auto& b : g.basis) {
    auto v = b.variables();
    vars.insert(v.begin(), v.end());
  }
  auto v = p.variables();
  vars.insert(v.begin(), v.end());
  return {std::vector<JetVar>(vars.begin(), vars.end()), g.ordering};
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  const auto ring = ring_for(g, p);
  std::vector<detail::DensePoly> basis;
  basis.reserve(g.basis.size());
  for (const auto& b : g.basis) {
    auto d = ring.from(b);
    // Division needs monic elements; a hand-built basis may not be.
    if (!d.empty() && d.front().coeff != 1) {
      const Rational inv = 1 / d.front().coeff;
      for (auto& t : d) {
        t.coeff *= inv;
      }
    }
    basis.push_back(std::move(d));
  }
  return ring.to(detail::normal_form(ring, ring.from(p), basis));
}

std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& g) {
  const auto ring = ring_for(g, Polynomial());
  std::vector<detail::Exponents> leading;
  for (const auto& b : g.basis) {
    if (b.is_zero()) {
      continue;
    }
    leading.push_back(ring.from(Polynomial::term(Rational(1), leading_monomial(b, g.ordering))).front().exps);
  }
  return detail::count_standard_monomials(ring, leading);
}

}  // namespace jetmult::oracle
