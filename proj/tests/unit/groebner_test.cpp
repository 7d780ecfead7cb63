#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <jetmult/groebner.hpp>
#include <jetmult/text_format.hpp>

#include "oracles.hpp"

namespace jetmult::oracle {
namespace {

Polynomial var(std::uint32_t b, std::uint32_t o) { return Polynomial::variable(JetVar(b, o)); }

// y1 = x1_0, y2 = x2_0, y3 = x3_0: the fixed order gives y1 > y2 > y3.
const Polynomial y1 = var(1, 0);
const Polynomial y2 = var(2, 0);
const Polynomial y3 = var(3, 0);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrdering ord) {
  const auto lf = leading_monomial(f, ord);
  const auto lg = leading_monomial(g, ord);
  const auto l = lf.lcm(lg);
  return Polynomial::term(1 / f.coefficient(lf), l.divided_by(lf)) * f -
         Polynomial::term(1 / g.coefficient(lg), l.divided_by(lg)) * g;
}

void expect_groebner_and_reduced(const GroebnerBasis& G) {
  for (std::size_t i = 0; i < G.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < G.basis.size(); ++j) {
      EXPECT_TRUE(normal_form(s_polynomial(G.basis[i], G.basis[j], G.ordering), G).is_zero());
    }
  }
  const auto lts = G.leading_monomials();
  for (std::size_t i = 0; i < G.basis.size(); ++i) {
    EXPECT_EQ(G.basis[i].coefficient(lts[i]), 1);
    for (const auto& [mono, coeff] : G.basis[i].terms()) {
      for (std::size_t j = 0; j < lts.size(); ++j) {
        if (j != i) EXPECT_FALSE(lts[j].divides(mono)) << to_string(G.basis[i]);
      }
    }
  }
}

TEST(Buchberger, PrincipalMonomialIdeal) {
  const std::vector<Polynomial> gens{y1};
  const auto G = buchberger(gens);
  EXPECT_EQ(G.basis, std::vector<Polynomial>{y1});
  EXPECT_TRUE(G.reduced);
}

TEST(Buchberger, ProductAndLinearForm) {
  const Rational a(5);
  const Rational b(3);
  const std::vector<Polynomial> gens{y1 * y2, Polynomial(b) * y1 + Polynomial(a) * y2};
  const auto G = buchberger(gens);
  expect_groebner_and_reduced(G);
  // b*y1 + a*y2 has leading term y1, so y1 = -(a/b) y2 and y2^2 is in the ideal.
  EXPECT_EQ(G.basis, (std::vector<Polynomial>{y1 + Polynomial(a / b) * y2, y2 * y2}));

  // Independent route: leading monomials of the homogeneous ideal up to
  // degree 5 from the Macaulay matrix.
  const std::vector<JetVar> vars{JetVar(1, 0), JetVar(2, 0)};
  const auto expected = testing::homogeneous_leading_monomials(gens, vars, 5);
  const auto lts = G.leading_monomials();
  for (const auto& e : expected) {
    EXPECT_TRUE(std::any_of(lts.begin(), lts.end(), [&](const Monomial& lt) {
      const auto le = testing::to_exp_vec(lt, vars);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (le[i] > e[i]) return false;
      return true;
    }));
  }
  for (const auto& lt : lts) EXPECT_TRUE(expected.contains(testing::to_exp_vec(lt, vars)));
}

TEST(Buchberger, DuplicateGenerators) {
  const auto p = y1 * y1 - Polynomial(2) * y2 + Polynomial(3);
  const std::vector<Polynomial> once{p};
  const std::vector<Polynomial> twice{p, p};
  EXPECT_EQ(buchberger(twice).basis, buchberger(once).basis);
}

TEST(Buchberger, RejectsAllZero) {
  const std::vector<Polynomial> zeros{Polynomial(), Polynomial()};
  EXPECT_THROW(buchberger(zeros), std::invalid_argument);
}

TEST(Buchberger, UnitIdeal) {
  const std::vector<Polynomial> gens{y1, y1 - Polynomial(1)};
  const auto G = buchberger(gens);
  EXPECT_EQ(G.basis, std::vector<Polynomial>{Polynomial(1)});
  EXPECT_EQ(quotient_dimension(G), 0U);
}

TEST(Buchberger, LexEliminationExample) {
  // x^2 + y^2 - 1, x - y under lex: y is eliminated down to 2y^2 - 1.
  const std::vector<Polynomial> gens{y1 * y1 + y2 * y2 - Polynomial(1), y1 - y2};
  const auto G = buchberger(gens, MonomialOrdering::lex());
  expect_groebner_and_reduced(G);
  EXPECT_EQ(G.basis, (std::vector<Polynomial>{y2 * y2 - Polynomial(Rational(1, 2)), y1 - y2}));
  EXPECT_EQ(quotient_dimension(G), 2U);
}

std::vector<Polynomial> random_ideal(std::mt19937_64& rng, std::size_t count) {
  const std::vector<JetVar> vars{JetVar(1, 0), JetVar(2, 0), JetVar(3, 0)};
  std::vector<Polynomial> gens;
  while (gens.size() < count) {
    auto p = testing::random_polynomial(rng, vars, 2, 3, 9);
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  return gens;
}

TEST(Buchberger, RandomIdealsSatisfyCriterionAndPermutationInvariance) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    auto gens = random_ideal(rng, 3);
    const auto G = buchberger(gens);
    expect_groebner_and_reduced(G);
    for (const auto& g : gens) EXPECT_TRUE(normal_form(g, G).is_zero());
    std::shuffle(gens.begin(), gens.end(), rng);
    const auto H = buchberger(gens);
    for (const auto& h : H.basis) EXPECT_TRUE(normal_form(h, G).is_zero());
    for (const auto& g : G.basis) EXPECT_TRUE(normal_form(g, H).is_zero());
    // The reduced basis is unique.
    EXPECT_EQ(G.basis, H.basis);
  }
}

TEST(Buchberger, QuotientDimensionIndependentOfOrdering) {
  std::mt19937_64 rng(123);
  int finite = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto gens = random_ideal(rng, 3);
    const std::vector<JetVar> vars{JetVar(1, 0), JetVar(2, 0), JetVar(3, 0)};
    const auto dg = quotient_dimension(buchberger(gens, MonomialOrdering::degrevlex(), vars));
    const auto lg = quotient_dimension(buchberger(gens, MonomialOrdering::lex(), vars));
    EXPECT_EQ(dg, lg);
    finite += dg.has_value() ? 1 : 0;
  }
  EXPECT_GT(finite, 0);
}

TEST(NormalForm, GeneratorsReduceToZero) {
  const std::vector<Polynomial> gens{y1 * y2 - y3, y2 * y2 - y1, y1 * y3 + Polynomial(2)};
  const auto G = buchberger(gens);
  for (const auto& g : gens) EXPECT_TRUE(normal_form(g, G).is_zero());
}

TEST(NormalForm, UnitsStayWhenIdealIsProper) {
  const std::vector<Polynomial> gens{y1 * y2, y1 + y2 * y2};
  EXPECT_EQ(normal_form(Polynomial(1), buchberger(gens)), Polynomial(1));
}

TEST(NormalForm, IdempotentAndLinear) {
  std::mt19937_64 rng(500);
  const std::vector<JetVar> vars{JetVar(1, 0), JetVar(2, 0), JetVar(3, 0)};
  const auto G = buchberger(random_ideal(rng, 2));
  for (int i = 0; i < 200; ++i) {
    const auto p = testing::random_polynomial(rng, vars, 4, 5);
    const auto q = testing::random_polynomial(rng, vars, 4, 5);
    const auto np = normal_form(p, G);
    EXPECT_EQ(normal_form(np, G), np);
    EXPECT_EQ(normal_form(p + q, G), np + normal_form(q, G));
    EXPECT_TRUE(normal_form(p - np, G).is_zero());
  }
}

TEST(NormalForm, HandlesVariablesOutsideTheBasis) {
  const std::vector<Polynomial> gens{y1 - Polynomial(2)};
  EXPECT_EQ(normal_form(y1 * var(7, 3), buchberger(gens)), Polynomial(2) * var(7, 3));
}

TEST(QuotientDimension, CoordinateIdeal) {
  const std::vector<Polynomial> gens{y1, y2};
  EXPECT_EQ(quotient_dimension(buchberger(gens)), 1U);
}

TEST(QuotientDimension, StandardMonomialCount) {
  GroebnerBasis G{MonomialOrdering::degrevlex(), {y2, y1 * y1}, true, {JetVar(1, 0), JetVar(2, 0)}};
  EXPECT_EQ(quotient_dimension(G), 2U);
  GroebnerBasis H{MonomialOrdering::degrevlex(), {y1 * y1, y1 * y2, y2 * y2}, true, {}};
  EXPECT_EQ(quotient_dimension(H), 3U);
  GroebnerBasis K{MonomialOrdering::degrevlex(), {y1 * y1 * y1, y2 * y2, y3}, true, {}};
  EXPECT_EQ(quotient_dimension(K), 6U);
}

TEST(QuotientDimension, InfiniteWithoutPurePowers) {
  const std::vector<Polynomial> gens{y1 * y2};
  EXPECT_FALSE(quotient_dimension(buchberger(gens)).has_value());
  // A ring variable absent from the generators is free.
  const std::vector<JetVar> extra{JetVar(3, 0)};
  const std::vector<Polynomial> coords{y1, y2};
  EXPECT_FALSE(quotient_dimension(buchberger(coords, MonomialOrdering::degrevlex(), extra)).has_value());
}

}  // namespace
}  // namespace jetmult::oracle
