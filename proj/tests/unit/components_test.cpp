#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <thread>

#include <jetmult/combinatorics.hpp>
#include <jetmult/components.hpp>

namespace jetmult::comp {
namespace {

// Brute force: all r-tuples in [0, total]^r summing to total.
std::vector<std::vector<std::uint32_t>> brute_weak_compositions(std::uint32_t total, std::uint32_t r) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> digits(r, 0);
  while (true) {
    std::uint32_t sum = 0;
    for (auto d : digits) sum += d;
    if (sum == total) out.push_back(digits);
    std::size_t i = r;
    // Increment as a big-endian odometer so the output is lexicographic.
    while (i > 0 && digits[i - 1] == total) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

Integer factorial_by_loop(std::uint32_t n) {
  Integer f(1);
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

TEST(Composition, Validates) {
  EXPECT_NO_THROW(Composition({1, 2}, 2));
  EXPECT_THROW(Composition({1, 1}, 2), std::invalid_argument);
  EXPECT_THROW(Composition({}, 0), std::invalid_argument);
}

TEST(EnumerateMinimalPrimes, TwoFactorsFirstOrder) {
  const auto primes = enumerate_minimal_primes(2, 1);
  ASSERT_EQ(primes.size(), 3U);
  EXPECT_EQ(primes[0].composition.parts(), (std::vector<std::uint32_t>{0, 2}));
  EXPECT_EQ(primes[0].generators(), (std::vector<JetVar>{JetVar(2, 0), JetVar(2, 1)}));
  EXPECT_TRUE(primes[0].blocks[0].empty());
  EXPECT_EQ(primes[1].generators(), (std::vector<JetVar>{JetVar(1, 0), JetVar(2, 0)}));
  EXPECT_EQ(primes[2].generators(), (std::vector<JetVar>{JetVar(1, 0), JetVar(1, 1)}));
}

TEST(EnumerateMinimalPrimes, SingleFactor) {
  const auto primes = enumerate_minimal_primes(1, 3);
  ASSERT_EQ(primes.size(), 1U);
  EXPECT_EQ(primes[0].generators(), (std::vector<JetVar>{JetVar(1, 0), JetVar(1, 1), JetVar(1, 2), JetVar(1, 3)}));
}

TEST(EnumerateMinimalPrimes, MatchesBruteForceEnumeration) {
  EXPECT_EQ(enumerate_minimal_primes(3, 2).size(), 10U);
  for (std::uint32_t r = 1; r <= 4; ++r) {
    for (std::uint32_t m = 0; m <= 5; ++m) {
      const auto primes = enumerate_minimal_primes(r, m);
      const auto expected = brute_weak_compositions(m + 1, r);
      ASSERT_EQ(primes.size(), expected.size());
      for (std::size_t i = 0; i < primes.size(); ++i) {
        EXPECT_EQ(primes[i].composition.parts(), expected[i]);
        EXPECT_EQ(primes[i].codimension(), m + 1);
      }
    }
  }
}

TEST(EnumerateMinimalPrimes, CountIsStarsAndBars) {
  for (std::uint32_t r = 1; r <= 6; ++r) {
    for (std::uint32_t m = 0; m <= 8; ++m) {
      EXPECT_EQ(Integer(static_cast<unsigned long>(enumerate_minimal_primes(r, m).size())), binomial(m + r, r - 1));
    }
  }
}

TEST(MultiplicityFormula, Examples) {
  EXPECT_EQ(multiplicity_formula(Composition({1, 2}, 2)), 3);
  for (std::uint32_t m = 0; m <= 25; ++m) {
    EXPECT_EQ(multiplicity_formula(Composition({m + 1}, m)), 1);
  }
}

TEST(MultiplicityFormula, AllUnitPartsGiveFactorial) {
  for (std::uint32_t m = 0; m <= 9; ++m) {
    const Composition c(std::vector<std::uint32_t>(m + 1, 1), m);
    EXPECT_EQ(multiplicity_formula(c), factorial_by_loop(m + 1));
    EXPECT_EQ(multiplicity_recursive(c), factorial_by_loop(m + 1));
  }
}

TEST(MultiplicityFormula, ArbitraryPrecision) {
  // 25! overflows 64 bits.
  const Composition c(std::vector<std::uint32_t>(25, 1), 24);
  EXPECT_EQ(multiplicity_formula(c).get_str(), "15511210043330985984000000");
}

TEST(MultiplicityRecursive, OneStep) {
  EXPECT_EQ(multiplicity_recursive(Composition({1, 1}, 1)), 2);
}

TEST(MultiplicityRecursive, SingleSurvivingFactor) {
  EXPECT_EQ(multiplicity_recursive(Composition({0, 0, 0, 5}, 4)), 1);
}

TEST(MultiplicityRecursive, AgreesWithFormulaExhaustively) {
  for (std::uint32_t r = 1; r <= 5; ++r) {
    for (std::uint32_t m = 0; m <= 10; ++m) {
      for (const auto& p : enumerate_minimal_primes(r, m)) {
        ASSERT_EQ(multiplicity_recursive(p.composition), multiplicity_formula(p.composition));
      }
    }
  }
}

TEST(MultiplicityRecursive, MemoIsSharedAcrossThreads) {
  RecursiveMultiplicity memo;
  std::vector<std::jthread> workers;
  std::vector<Integer> results(4);
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] { results[t] = memo(Composition({3, 4, 2, 1}, 9)); });
  }
  workers.clear();
  for (const auto& v : results) EXPECT_EQ(v, multiplicity_formula(Composition({3, 4, 2, 1}, 9)));
  EXPECT_GT(memo.memo_size(), 0U);
}

TEST(DropZeroParts, RemovesZeros) {
  const auto d = drop_zero_parts(Composition({2, 0, 1}, 2));
  EXPECT_EQ(d.reduced.parts(), (std::vector<std::uint32_t>{2, 1}));
  EXPECT_EQ(d.removed_bases, std::vector<std::uint32_t>{2});
}

TEST(DropZeroParts, FixedPoint) {
  const auto d = drop_zero_parts(Composition({1, 1}, 1));
  EXPECT_EQ(d.reduced, Composition({1, 1}, 1));
  EXPECT_TRUE(d.removed_bases.empty());
}

TEST(DropZeroParts, PreservesMultiplicityOnRandomCompositions) {
  std::mt19937_64 rng(1000);
  for (int i = 0; i < 1000; ++i) {
    const std::uint32_t r = 1 + rng() % 6;
    const std::uint32_t m = rng() % 12;
    std::vector<std::uint32_t> parts(r, 0);
    for (std::uint32_t k = 0; k <= m; ++k) ++parts[rng() % r];
    const Composition c(parts, m);
    EXPECT_EQ(multiplicity_formula(c), multiplicity_formula(drop_zero_parts(c).reduced));
  }
}

TEST(Multiplicity, SymmetricUnderPermutation) {
  std::vector<std::uint32_t> parts{3, 0, 2, 1};
  const auto expected = multiplicity_formula(Composition(parts, 5));
  std::sort(parts.begin(), parts.end());
  do {
    EXPECT_EQ(multiplicity_formula(Composition(parts, 5)), expected);
    EXPECT_EQ(multiplicity_recursive(Composition(parts, 5)), expected);
  } while (std::next_permutation(parts.begin(), parts.end()));
}

TEST(Census, TwoFactorsFirstOrder) {
  const auto c = census(2, 1);
  ASSERT_EQ(c.components.size(), 3U);
  EXPECT_EQ(c.components[0].multiplicity_formula, 1);
  EXPECT_EQ(c.components[1].multiplicity_formula, 2);
  EXPECT_EQ(c.components[2].multiplicity_formula, 1);
  EXPECT_EQ(c.multiplicity_sum, 4);
  EXPECT_TRUE(c.mass_identity_holds());
}

TEST(Census, SingleFactor) {
  const auto c = census(1, 7);
  ASSERT_EQ(c.components.size(), 1U);
  EXPECT_EQ(c.multiplicity_sum, 1);
}

TEST(Census, ThreeFactorsSecondOrder) {
  const auto c = census(3, 2);
  EXPECT_EQ(c.components.size(), 10U);
  EXPECT_EQ(c.multiplicity_sum, 27);
}

TEST(Census, MassIdentity) {
  for (std::uint32_t r = 1; r <= 5; ++r) {
    for (std::uint32_t m = 0; m <= 8; ++m) {
      const auto c = census(r, m);
      Integer power(1);
      for (std::uint32_t i = 0; i <= m; ++i) power *= r;
      EXPECT_EQ(c.multiplicity_sum, power);
    }
  }
}

TEST(ComponentReport, Status) {
  ComponentReport report{.prime = make_prime(Composition({1, 1}, 1))};
  report.multiplicity_formula = 2;
  report.multiplicity_recursive = 2;
  EXPECT_EQ(report.status(), Status::unverified);
  report.multiplicity_oracle = Integer(2);
  EXPECT_EQ(report.status(), Status::consistent);
  report.multiplicity_oracle = Integer(3);
  EXPECT_EQ(report.status(), Status::inconsistent);
  report.multiplicity_oracle.reset();
  report.multiplicity_recursive = 1;
  EXPECT_EQ(report.status(), Status::inconsistent);
  EXPECT_EQ(to_string(Status::consistent), "consistent");
}

}  // namespace
}  // namespace jetmult::comp
