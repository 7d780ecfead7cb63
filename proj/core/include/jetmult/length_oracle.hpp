#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "jetmult/components.hpp"
#include "jetmult/ordering.hpp"
#include "jetmult/polynomial.hpp"

namespace jetmult::oracle {

enum class OracleErrorCode { not_minimal, generic_disagreement };
std::string_view to_string(OracleErrorCode code);

class OracleError : public std::runtime_error {
 public:
  OracleError(OracleErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] OracleErrorCode code() const noexcept { return code_; }

 private:
  OracleErrorCode code_;
};

struct LocalLengthOptions {
  /// Largest truncation order N tried before giving up with not_minimal.
  std::uint32_t max_truncation = 64;
  MonomialOrdering ordering = MonomialOrdering::degrevlex();
};

struct LocalLength {
  std::uint64_t length = 0;
  /// The N at which d_N = d_{N+1} first held.
  std::uint32_t truncation_order = 0;
  /// d_1, d_2, ..., d_{N+1}, where d_k = dim R / (I + m^k).
  std::vector<std::uint64_t> dimensions;
};

/// Length of the local ring at the origin of R / I, where R is the polynomial
/// ring in `variables` and m is the ideal they generate. Computed as
/// dim R / (I + m^N) for the first N at which the dimension stops growing.
/// Throws OracleError(not_minimal) if that has not happened by
/// options.max_truncation.
LocalLength local_length_at_origin(std::span<const Polynomial> gens, std::span<const JetVar> variables,
                                   const LocalLengthOptions& options = {});

/// As above with the ring generated by the variables of `gens`.
LocalLength local_length_at_origin(std::span<const Polynomial> gens, const LocalLengthOptions& options = {});

/// Random nonzero rational values for the coordinates off a component.
struct GenericSubstitution {
  std::uint64_t seed = 0;
  std::map<JetVar, Rational> values;

  /// Numerators uniform in [-bound, bound] \ {0}, denominators uniform in
  /// [1, bound], drawn from mt19937_64(seed) in variable order. The draw is
  /// independent of the standard library's distribution implementations.
  static GenericSubstitution draw(std::uint64_t seed, std::span<const JetVar> vars, std::uint32_t bound);
};

/// Seed for the given resampling round; round 0 returns `seed` unchanged.
std::uint64_t derive_seed(std::uint64_t seed, std::uint32_t round);

struct OracleOptions {
  std::uint32_t value_bound = 100;
  std::uint32_t max_rounds = 5;
  LocalLengthOptions local;
};

struct LengthResult {
  std::uint64_t length = 0;
  /// Largest truncation order over the accepted trials.
  std::uint32_t truncation_order_used = 0;
  std::vector<comp::OracleTrial> trials;
  /// Rounds consumed, 1 when the first seeds already agreed.
  std::uint32_t rounds = 1;
  std::uint32_t value_bound = 0;

  [[nodiscard]] std::vector<std::uint64_t> lengths() const;
  [[nodiscard]] comp::VerificationRecord record() const;
};

/// The coordinates of the jet ring (base <= r, order <= m) not in the prime.
std::vector<JetVar> complementary_variables(const comp::MinimalPrime& prime, std::uint32_t r, std::uint32_t m);

/// g_0..g_m of x_1...x_r with `values` substituted.
std::vector<Polynomial> specialize_generators(std::uint32_t r, std::uint32_t m,
                                              const std::map<JetVar, Rational>& values);

/// Measures the multiplicity along P(m; c) without using any closed form:
/// for each seed, specialize the coordinates off P at random nonzero values
/// and take the local length at the origin of the P-coordinates. Trials must
/// agree; otherwise fresh seeds are drawn, up to options.max_rounds rounds.
LengthResult oracle_multiplicity(std::uint32_t r, std::uint32_t m, const comp::Composition& c,
                                 std::span<const std::uint64_t> seeds, const OracleOptions& options = {});

}  // namespace jetmult::oracle
