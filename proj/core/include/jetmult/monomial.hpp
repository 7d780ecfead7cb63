#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jetmult {

/// The jet coordinate x_i^(j): `base` is the factor index i (1-based) and
/// `order` the power of t it multiplies. Ordered by base, then by order.
struct JetVar {
  std::uint32_t base = 1;
  std::uint32_t order = 0;

  constexpr JetVar() = default;
  constexpr JetVar(std::uint32_t base_index, std::uint32_t jet_order) : base(base_index), order(jet_order) {
    if (base_index == 0) {
      throw std::invalid_argument("JetVar base index must be at least 1");
    }
  }

  friend constexpr auto operator<=>(const JetVar&, const JetVar&) = default;
  friend constexpr bool operator==(const JetVar&, const JetVar&) = default;
};

/// Text form used throughout: x<base>_<order>.
std::string to_string(JetVar v);

/// Sparse power product of JetVars. Entries are kept sorted by variable with
/// strictly positive exponents; the empty product is the monomial 1.
class Monomial {
 public:
  using Entry = std::pair<JetVar, std::uint32_t>;

  Monomial() = default;
  /// Accepts entries in any order; repeated variables are merged and zero
  /// exponents dropped.
  explicit Monomial(std::vector<Entry> entries);
  Monomial(std::initializer_list<Entry> entries) : Monomial(std::vector<Entry>(entries)) {}

  static Monomial of(JetVar v, std::uint32_t exponent = 1);

  [[nodiscard]] std::span<const Entry> entries() const noexcept { return entries_; }
  [[nodiscard]] bool is_one() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::uint32_t exponent(JetVar v) const noexcept;
  [[nodiscard]] std::uint64_t total_degree() const noexcept;
  /// Sum of order * exponent over all factors.
  [[nodiscard]] std::uint64_t jet_weight() const noexcept;

  [[nodiscard]] bool divides(const Monomial& other) const noexcept;
  [[nodiscard]] Monomial lcm(const Monomial& other) const;
  /// this / divisor; throws std::domain_error unless divisor divides this.
  [[nodiscard]] Monomial divided_by(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace jetmult

template <>
struct std::hash<jetmult::JetVar> {
  std::size_t operator()(const jetmult::JetVar& v) const noexcept {
    return (static_cast<std::size_t>(v.base) << 32U) ^ v.order;
  }
};
