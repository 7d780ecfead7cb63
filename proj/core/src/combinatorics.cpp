#include "jetmult/combinatorics.hpp"

#include <algorithm>

namespace jetmult {

namespace {

void compose(std::uint32_t remaining, std::uint32_t index, std::uint32_t bound, std::vector<std::uint32_t>& current,
             const std::function<void(std::span<const std::uint32_t>)>& visit) {
  const auto parts = static_cast<std::uint32_t>(current.size());
  if (index + 1 == parts) {
    if (remaining <= bound) {
      current[index] = remaining;
      visit(current);
    }
    return;
  }
  // The remaining slots can absorb at most bound each.
  const std::uint64_t capacity_after = static_cast<std::uint64_t>(parts - index - 1) * bound;
  const std::uint32_t lo = remaining > capacity_after ? static_cast<std::uint32_t>(remaining - capacity_after) : 0;
  const std::uint32_t hi = std::min(remaining, bound);
  for (std::uint32_t v = lo; v <= hi; ++v) {
    current[index] = v;
    compose(remaining - v, index + 1, bound, current, visit);
  }
}

}  // namespace

void for_each_bounded_composition(std::uint32_t total, std::uint32_t parts, std::uint32_t bound,
                                  const std::function<void(std::span<const std::uint32_t>)>& visit) {
  if (parts == 0) {
    if (total == 0) {
      visit({});
    }
    return;
  }
  std::vector<std::uint32_t> current(parts, 0);
  compose(total, 0, bound, current, visit);
}

std::vector<std::vector<std::uint32_t>> weak_compositions(std::uint32_t total, std::uint32_t parts) {
  std::vector<std::vector<std::uint32_t>> out;
  for_each_bounded_composition(total, parts, total,
                               [&](std::span<const std::uint32_t> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

mpz_class factorial(std::uint32_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class binomial(std::uint32_t n, std::uint32_t k) {
  mpz_class out;
  if (k > n) {
    return out;
  }
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace jetmult
