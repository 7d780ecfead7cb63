#include "jetmult/components.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "jetmult/combinatorics.hpp"

namespace jetmult::comp {

Composition::Composition(std::vector<std::uint32_t> parts, std::uint32_t m) : parts_(std::move(parts)), m_(m) {
  std::uint64_t sum = 0;
  for (auto t : parts_) {
    if (t > m_ + 1) {
      throw std::invalid_argument("Composition: part exceeds m + 1");
    }
    sum += t;
  }
  if (sum != static_cast<std::uint64_t>(m_) + 1) {
    throw std::invalid_argument("Composition: parts must sum to m + 1 = " + std::to_string(m_ + 1) + ", got " +
                                std::to_string(sum));
  }
}

std::vector<JetVar> MinimalPrime::generators() const {
  std::vector<JetVar> out;
  for (const auto& block : blocks) {
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::size_t MinimalPrime::codimension() const {
  std::size_t n = 0;
  for (const auto& block : blocks) {
    n += block.size();
  }
  return n;
}

bool MinimalPrime::contains(JetVar v) const {
  if (v.base < 1 || v.base > blocks.size()) {
    return false;
  }
  return v.order < blocks[v.base - 1].size();
}

MinimalPrime make_prime(const Composition& c) {
  MinimalPrime prime{c, {}};
  prime.blocks.resize(c.r());
  for (std::uint32_t i = 0; i < c.r(); ++i) {
    for (std::uint32_t j = 0; j < c.parts()[i]; ++j) {
      prime.blocks[i].emplace_back(i + 1, j);
    }
  }
  return prime;
}

std::vector<MinimalPrime> enumerate_minimal_primes(std::uint32_t r, std::uint32_t m) {
  if (r == 0) {
    throw std::invalid_argument("enumerate_minimal_primes: r must be at least 1");
  }
  std::vector<MinimalPrime> primes;
  for (auto& parts : weak_compositions(m + 1, r)) {
    primes.push_back(make_prime(Composition(std::move(parts), m)));
  }
  return primes;
}

bool ideal_contained_in(const jet::JetIdeal& ideal, const MinimalPrime& prime) {
  for (const auto& g : ideal.generators) {
    for (const auto& [mono, coeff] : g.terms()) {
      const auto& entries = mono.entries();
      bool hit = std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return prime.contains(e.first); });
      if (!hit) {
        return false;
      }
    }
  }
  return true;
}

Integer multiplicity_formula(const Composition& c) {
  Integer denominator(1);
  for (auto t : c.parts()) {
    denominator *= factorial(t);
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), factorial(c.m() + 1).get_mpz_t(), denominator.get_mpz_t());
  return out;
}

ZeroDrop drop_zero_parts(const Composition& c) {
  std::vector<std::uint32_t> kept;
  std::vector<std::uint32_t> removed;
  for (std::uint32_t i = 0; i < c.r(); ++i) {
    if (c.parts()[i] == 0) {
      removed.push_back(i + 1);
    } else {
      kept.push_back(c.parts()[i]);
    }
  }
  return {Composition(std::move(kept), c.m()), std::move(removed)};
}

Integer RecursiveMultiplicity::operator()(const Composition& c) {
  auto positive = drop_zero_parts(c).reduced.parts();
  return evaluate(std::move(positive));
}

std::size_t RecursiveMultiplicity::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

Integer RecursiveMultiplicity::evaluate(std::vector<std::uint32_t> positive_parts) {
  std::sort(positive_parts.begin(), positive_parts.end());
  const auto total = std::accumulate(positive_parts.begin(), positive_parts.end(), std::uint64_t{0});
  if (total <= 1) {
    // m = 0: the single surviving part is 1.
    return Integer(1);
  }
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(positive_parts); it != memo_.end()) {
      return it->second;
    }
  }
  Integer sum(0);
  for (std::size_t n = 0; n < positive_parts.size(); ++n) {
    std::vector<std::uint32_t> lower;
    lower.reserve(positive_parts.size());
    for (std::size_t i = 0; i < positive_parts.size(); ++i) {
      const auto t = i == n ? positive_parts[i] - 1 : positive_parts[i];
      if (t > 0) {
        lower.push_back(t);
      }
    }
    sum += evaluate(std::move(lower));
  }
  std::unique_lock lock(mutex_);
  memo_.emplace(std::move(positive_parts), sum);
  return sum;
}

Integer multiplicity_recursive(const Composition& c) {
  static RecursiveMultiplicity shared;
  return shared(c);
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::consistent:
      return "consistent";
    case Status::inconsistent:
      return "inconsistent";
    case Status::unverified:
      return "unverified";
  }
  return "unverified";
}

Status ComponentReport::status() const {
  if (multiplicity_formula != multiplicity_recursive) {
    return Status::inconsistent;
  }
  if (!multiplicity_oracle) {
    return Status::unverified;
  }
  return *multiplicity_oracle == multiplicity_formula ? Status::consistent : Status::inconsistent;
}

Integer Census::expected_mass() const {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), r, m + 1);
  return out;
}

Census census(std::uint32_t r, std::uint32_t m) {
  Census out;
  out.r = r;
  out.m = m;
  for (auto& prime : enumerate_minimal_primes(r, m)) {
    ComponentReport report{.prime = std::move(prime)};
    report.multiplicity_formula = multiplicity_formula(report.prime.composition);
    report.multiplicity_recursive = multiplicity_recursive(report.prime.composition);
    out.multiplicity_sum += report.multiplicity_formula;
    out.components.push_back(std::move(report));
  }
  return out;
}

}  // namespace jetmult::comp
