#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace jetmult {

/// Calls `visit` with every tuple (a_1..a_parts) of integers in [0, bound]
/// summing to `total`, in lexicographically increasing order.
void for_each_bounded_composition(std::uint32_t total, std::uint32_t parts, std::uint32_t bound,
                                  const std::function<void(std::span<const std::uint32_t>)>& visit);

/// All weak compositions of `total` into `parts` parts, lexicographic.
std::vector<std::vector<std::uint32_t>> weak_compositions(std::uint32_t total, std::uint32_t parts);

mpz_class factorial(std::uint32_t n);
mpz_class binomial(std::uint32_t n, std::uint32_t k);

}  // namespace jetmult
