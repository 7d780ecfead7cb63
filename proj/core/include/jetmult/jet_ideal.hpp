#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "jetmult/polynomial.hpp"

namespace jetmult::jet {

/// Truncated power series in t with polynomial coefficients; index k holds
/// the coefficient of t^k. Multiplication drops every power above the length.
using Series = std::vector<Polynomial>;

/// The generic m-jet x_i -> x_i^(0) + x_i^(1) t + ... + x_i^(m) t^m for every
/// base index.
class TruncatedSeriesAssignment {
 public:
  explicit TruncatedSeriesAssignment(std::uint32_t m) : m_(m) {}

  [[nodiscard]] std::uint32_t m() const noexcept { return m_; }
  /// Coefficient variables x_base^(0..m).
  [[nodiscard]] std::vector<JetVar> coefficients(std::uint32_t base) const;
  [[nodiscard]] Series series(std::uint32_t base) const;

 private:
  std::uint32_t m_;
};

Series truncated_product(const Series& a, const Series& b);

/// Origin of a generator of the general construction: the coefficient of
/// t^power in the expansion of input polynomial number `source`.
struct GeneratorLabel {
  std::size_t source = 0;
  std::uint32_t power = 0;

  friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
};

struct JetIdeal {
  enum class Kind { monomial_hypersurface, general };

  Kind kind = Kind::monomial_hypersurface;
  /// Number of monomial factors; for the general construction, the largest
  /// base index in the input.
  std::uint32_t r = 0;
  std::uint32_t m = 0;
  std::vector<Polynomial> generators;
  std::vector<GeneratorLabel> labels;
};

/// Expands each input polynomial (in order-0 JetVars standing for the
/// original coordinates) along the generic m-jet and returns the coefficients
/// of t^0..t^m, grouped by input.
JetIdeal build_jet_ideal_general(std::span<const Polynomial> gens, std::uint32_t m);

/// [g_0, ..., g_m] for the hypersurface x_1 ... x_r, where g_k sums
/// x_1^(i_1) ... x_r^(i_r) over i_1 + ... + i_r = k with 0 <= i_j <= m.
JetIdeal monomial_jet_generators(std::uint32_t r, std::uint32_t m);

/// g_k = sum_q lhs-factor * h_q, recorded as an equality to audit.
struct GeneratorIdentity {
  std::uint32_t k = 0;
  Polynomial lhs;
  Polynomial rhs;

  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

struct UnitFactorization {
  /// (h_0, ..., h_m) in the original base names; factor `dropped_base` is
  /// absent.
  JetIdeal reduced;
  std::uint32_t dropped_base = 0;
  /// g_k = sum_{q<=k} x_n^(k-q) h_q for k = 0..m.
  std::vector<GeneratorIdentity> identities;
};

/// Removes factor n from a hypersurface jet ideal, as happens after
/// localizing where x_n^(0) is a unit. h_q is read off g_q by setting
/// x_n^(0) = 1 and x_n^(j) = 0 for j >= 1.
UnitFactorization factor_out_unit_generators(const JetIdeal& ideal, std::uint32_t n);

/// Sets x_n^(0) = 0 in g_1..g_m, then renames x_n^(q) -> x_n^(q-1). The
/// result coincides with monomial_jet_generators(r, m - 1).
JetIdeal shift_after_vanishing(const JetIdeal& ideal, std::uint32_t n);

/// Renames the base indices present in the ideal to 1, 2, ... preserving
/// their relative order.
JetIdeal compact_bases(const JetIdeal& ideal);

}  // namespace jetmult::jet
