#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "jetmult/jet_ideal.hpp"
#include "jetmult/polynomial.hpp"

namespace jetmult::comp {

/// (t_1, ..., t_r) with t_1 + ... + t_r = m + 1, naming the component
/// P(m; t_1, ..., t_r).
class Composition {
 public:
  /// Throws std::invalid_argument unless the parts sum to m + 1.
  Composition(std::vector<std::uint32_t> parts, std::uint32_t m);

  [[nodiscard]] const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
  [[nodiscard]] std::uint32_t m() const noexcept { return m_; }
  [[nodiscard]] std::uint32_t r() const noexcept { return static_cast<std::uint32_t>(parts_.size()); }

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<std::uint32_t> parts_;
  std::uint32_t m_;
};

/// The coordinate prime generated by x_i^(0..t_i-1) for each i. A factor with
/// t_i = 0 contributes an empty block.
struct MinimalPrime {
  Composition composition;
  std::vector<std::vector<JetVar>> blocks;

  [[nodiscard]] std::vector<JetVar> generators() const;
  [[nodiscard]] std::size_t codimension() const;
  [[nodiscard]] bool contains(JetVar v) const;
};

MinimalPrime make_prime(const Composition& c);

/// Every weak composition of m + 1 into r parts, lexicographic in the parts.
std::vector<MinimalPrime> enumerate_minimal_primes(std::uint32_t r, std::uint32_t m);

/// True when every term of every generator is divisible by some variable of
/// the prime.
bool ideal_contained_in(const jet::JetIdeal& ideal, const MinimalPrime& prime);

/// (m+1)! / (t_1! ... t_r!).
Integer multiplicity_formula(const Composition& c);

struct ZeroDrop {
  Composition reduced;
  /// 1-based bases whose part was zero.
  std::vector<std::uint32_t> removed_bases;
};

ZeroDrop drop_zero_parts(const Composition& c);

/// Multiplicity by the induction on m: drop zero parts, return 1 at m = 0,
/// otherwise sum over each positive part the value one level down with that
/// part decremented. The memo is keyed by the sorted nonzero parts and is
/// safe to share between threads.
class RecursiveMultiplicity {
 public:
  Integer operator()(const Composition& c);
  [[nodiscard]] std::size_t memo_size() const;

 private:
  Integer evaluate(std::vector<std::uint32_t> positive_parts);

  mutable std::shared_mutex mutex_;
  std::map<std::vector<std::uint32_t>, Integer> memo_;
};

/// Uses a process-wide RecursiveMultiplicity.
Integer multiplicity_recursive(const Composition& c);

enum class Status { consistent, inconsistent, unverified };
std::string_view to_string(Status s);

/// Replay data for one oracle trial.
struct OracleTrial {
  std::uint64_t seed = 0;
  std::map<JetVar, Rational> substitution;
  std::uint64_t length = 0;
  std::uint32_t truncation_order = 0;
};

struct VerificationRecord {
  std::vector<OracleTrial> trials;
  std::uint32_t value_bound = 0;
  std::uint32_t rounds = 1;
};

struct ComponentReport {
  MinimalPrime prime;
  Integer multiplicity_formula{};
  Integer multiplicity_recursive{};
  std::optional<Integer> multiplicity_oracle{};
  std::optional<VerificationRecord> verification{};
  std::optional<std::string> oracle_error{};

  /// inconsistent if any two present values differ; unverified if they agree
  /// but no oracle value is present; consistent otherwise.
  [[nodiscard]] Status status() const;
};

struct Census {
  std::uint32_t r = 0;
  std::uint32_t m = 0;
  std::vector<ComponentReport> components;
  Integer multiplicity_sum;

  /// r^(m+1), the value the multiplicity sum must take.
  [[nodiscard]] Integer expected_mass() const;
  [[nodiscard]] bool mass_identity_holds() const { return multiplicity_sum == expected_mass(); }
};

Census census(std::uint32_t r, std::uint32_t m);

}  // namespace jetmult::comp
