#include "jetmult/length_oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "dense_groebner.hpp"
#include "jetmult/jet_ideal.hpp"

namespace jetmult::oracle {

std::string_view to_string(OracleErrorCode code) {
  return code == OracleErrorCode::not_minimal ? "NOT_MINIMAL" : "GENERIC_DISAGREEMENT";
}

LocalLength local_length_at_origin(std::span<const Polynomial> gens, std::span<const JetVar> variables,
                                   const LocalLengthOptions& options) {
  std::set<JetVar> vars(variables.begin(), variables.end());
  for (const auto& g : gens) {
    for (auto v : g.variables()) {
      if (!vars.contains(v)) {
        throw std::invalid_argument("local_length_at_origin: generator uses " + to_string(v) +
                                    " outside the given variables");
      }
    }
  }
  const detail::DenseRing ring(std::vector<JetVar>(vars.begin(), vars.end()), options.ordering);
  std::vector<detail::DensePoly> base;
  for (const auto& g : gens) {
    if (!g.is_zero()) {
      base.push_back(ring.from(g));
    }
  }

  auto dimension_at = [&](std::uint32_t n) {
    std::vector<detail::DensePoly> input = detail::monomials_of_degree(ring, n);
    input.insert(input.end(), base.begin(), base.end());
    auto basis = detail::buchberger(ring, std::move(input));
    std::vector<detail::Exponents> leading;
    leading.reserve(basis.size());
    for (const auto& b : basis) {
      leading.push_back(b.front().exps);
    }
    // m^n is in the ideal, so the quotient is always finite.
    return *detail::count_standard_monomials(ring, leading);
  };

  LocalLength out;
  out.dimensions.push_back(dimension_at(1));
  for (std::uint32_t n = 1; n < options.max_truncation; ++n) {
    out.dimensions.push_back(dimension_at(n + 1));
    if (out.dimensions[n] == out.dimensions[n - 1]) {
      out.length = out.dimensions[n - 1];
      out.truncation_order = n;
      return out;
    }
  }
  throw OracleError(OracleErrorCode::not_minimal,
                    "local length did not stabilize by truncation order " + std::to_string(options.max_truncation) +
                        "; the origin is not an isolated component");
}

LocalLength local_length_at_origin(std::span<const Polynomial> gens, const LocalLengthOptions& options) {
  std::set<JetVar> vars;
  for (const auto& g : gens) {
    auto v = g.variables();
    vars.insert(v.begin(), v.end());
  }
  const std::vector<JetVar> list(vars.begin(), vars.end());
  return local_length_at_origin(gens, list, options);
}

namespace {

// Uniform draw in [0, n) by rejection on the raw 64-bit engine output.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace

GenericSubstitution GenericSubstitution::draw(std::uint64_t seed, std::span<const JetVar> vars, std::uint32_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("GenericSubstitution: value bound must be positive");
  }
  std::vector<JetVar> ordered(vars.begin(), vars.end());
  std::sort(ordered.begin(), ordered.end());
  std::mt19937_64 rng(seed);
  GenericSubstitution out{seed, {}};
  for (auto v : ordered) {
    // [0, 2B) -> [-B, -1] u [1, B]
    auto raw = static_cast<long>(uniform_below(rng, 2ULL * bound)) - static_cast<long>(bound);
    const long numerator = raw >= 0 ? raw + 1 : raw;
    const auto denominator = static_cast<unsigned long>(uniform_below(rng, bound) + 1);
    Rational q(numerator, denominator);
    q.canonicalize();
    out.values.emplace(v, std::move(q));
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint32_t round) {
  if (round == 0) {
    return seed;
  }
  // splitmix64 finalizer over the seed offset by the round.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * round;
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

std::vector<std::uint64_t> LengthResult::lengths() const {
  std::vector<std::uint64_t> out;
  out.reserve(trials.size());
  for (const auto& t : trials) {
    out.push_back(t.length);
  }
  return out;
}

comp::VerificationRecord LengthResult::record() const {
  return {trials, value_bound, rounds};
}

std::vector<JetVar> complementary_variables(const comp::MinimalPrime& prime, std::uint32_t r, std::uint32_t m) {
  std::vector<JetVar> out;
  for (std::uint32_t i = 1; i <= r; ++i) {
    for (std::uint32_t j = 0; j <= m; ++j) {
      const JetVar v(i, j);
      if (!prime.contains(v)) {
        out.push_back(v);
      }
    }
  }
  return out;
}

std::vector<Polynomial> specialize_generators(std::uint32_t r, std::uint32_t m,
                                              const std::map<JetVar, Rational>& values) {
  Assignment assignment;
  for (const auto& [v, q] : values) {
    assignment.emplace(v, Polynomial(q));
  }
  std::vector<Polynomial> out;
  for (const auto& g : jet::monomial_jet_generators(r, m).generators) {
    out.push_back(substitute(g, assignment));
  }
  return out;
}

LengthResult oracle_multiplicity(std::uint32_t r, std::uint32_t m, const comp::Composition& c,
                                 std::span<const std::uint64_t> seeds, const OracleOptions& options) {
  if (c.r() != r || c.m() != m) {
    throw std::invalid_argument("oracle_multiplicity: composition does not match (r, m)");
  }
  if (seeds.size() < 2) {
    throw std::invalid_argument("oracle_multiplicity: at least two seeds are required");
  }
  const auto prime = comp::make_prime(c);
  const auto prime_vars = prime.generators();
  const auto free_vars = complementary_variables(prime, r, m);

  for (std::uint32_t round = 0; round < options.max_rounds; ++round) {
    LengthResult result;
    result.rounds = round + 1;
    result.value_bound = options.value_bound;
    for (auto seed : seeds) {
      const auto sub = GenericSubstitution::draw(derive_seed(seed, round), free_vars, options.value_bound);
      const auto gens = specialize_generators(r, m, sub.values);
      const auto local = local_length_at_origin(gens, prime_vars, options.local);
      result.trials.push_back({sub.seed, sub.values, local.length, local.truncation_order});
      result.truncation_order_used = std::max(result.truncation_order_used, local.truncation_order);
    }
    const auto lengths = result.lengths();
    if (std::all_of(lengths.begin(), lengths.end(), [&](auto l) { return l == lengths.front(); })) {
      result.length = lengths.front();
      return result;
    }
  }
  throw OracleError(OracleErrorCode::generic_disagreement,
                    "oracle trials disagreed in all " + std::to_string(options.max_rounds) + " rounds");
}

}  // namespace jetmult::oracle
