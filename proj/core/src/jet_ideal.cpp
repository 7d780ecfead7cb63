#include "jetmult/jet_ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "jetmult/combinatorics.hpp"

namespace jetmult::jet {

std::vector<JetVar> TruncatedSeriesAssignment::coefficients(std::uint32_t base) const {
  std::vector<JetVar> vars;
  vars.reserve(m_ + 1);
  for (std::uint32_t j = 0; j <= m_; ++j) {
    vars.emplace_back(base, j);
  }
  return vars;
}

Series TruncatedSeriesAssignment::series(std::uint32_t base) const {
  Series s;
  s.reserve(m_ + 1);
  for (auto v : coefficients(base)) {
    s.push_back(Polynomial::variable(v));
  }
  return s;
}

Series truncated_product(const Series& a, const Series& b) {
  const auto len = std::min(a.size(), b.size());
  Series out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; i + j < len; ++j) {
      if (!b[j].is_zero()) {
        out[i + j] += a[i] * b[j];
      }
    }
  }
  return out;
}

JetIdeal build_jet_ideal_general(std::span<const Polynomial> gens, std::uint32_t m) {
  if (gens.empty()) {
    throw std::invalid_argument("build_jet_ideal_general: generator list is empty");
  }
  const TruncatedSeriesAssignment jets(m);
  JetIdeal ideal;
  ideal.kind = JetIdeal::Kind::general;
  ideal.m = m;

  for (std::size_t source = 0; source < gens.size(); ++source) {
    Series total(m + 1);
    for (const auto& [mono, coeff] : gens[source].terms()) {
      Series product(m + 1);
      product[0] = Polynomial(coeff);
      for (const auto& [var, exp] : mono.entries()) {
        if (var.order != 0) {
          throw std::invalid_argument("build_jet_ideal_general: input variable " + to_string(var) +
                                      " must have order 0");
        }
        ideal.r = std::max(ideal.r, var.base);
        const Series factor = jets.series(var.base);
        for (std::uint32_t e = 0; e < exp; ++e) {
          product = truncated_product(product, factor);
        }
      }
      for (std::uint32_t k = 0; k <= m; ++k) {
        total[k] += product[k];
      }
    }
    for (std::uint32_t k = 0; k <= m; ++k) {
      ideal.generators.push_back(std::move(total[k]));
      ideal.labels.push_back({source, k});
    }
  }
  return ideal;
}

JetIdeal monomial_jet_generators(std::uint32_t r, std::uint32_t m) {
  if (r == 0) {
    throw std::invalid_argument("monomial_jet_generators: r must be at least 1");
  }
  JetIdeal ideal;
  ideal.kind = JetIdeal::Kind::monomial_hypersurface;
  ideal.r = r;
  ideal.m = m;
  for (std::uint32_t k = 0; k <= m; ++k) {
    Polynomial g;
    for_each_bounded_composition(k, r, m, [&](std::span<const std::uint32_t> orders) {
      std::vector<Monomial::Entry> entries;
      entries.reserve(r);
      for (std::uint32_t i = 0; i < r; ++i) {
        entries.emplace_back(JetVar(i + 1, orders[i]), 1);
      }
      g.add_term(Rational(1), Monomial(std::move(entries)));
    });
    ideal.generators.push_back(std::move(g));
    ideal.labels.push_back({0, k});
  }
  return ideal;
}

namespace {

void require_hypersurface(const JetIdeal& ideal, const char* op) {
  if (ideal.kind != JetIdeal::Kind::monomial_hypersurface) {
    throw std::invalid_argument(std::string(op) + ": expected a monomial hypersurface jet ideal");
  }
  if (ideal.generators.size() != static_cast<std::size_t>(ideal.m) + 1) {
    throw std::invalid_argument(std::string(op) + ": generator count does not match m");
  }
}

void require_base(const JetIdeal& ideal, std::uint32_t n, const char* op) {
  if (n < 1 || n > ideal.r) {
    throw std::invalid_argument(std::string(op) + ": base index " + std::to_string(n) + " outside 1.." +
                                std::to_string(ideal.r));
  }
}

}  // namespace

UnitFactorization factor_out_unit_generators(const JetIdeal& ideal, std::uint32_t n) {
  constexpr const char* op = "factor_out_unit_generators";
  require_hypersurface(ideal, op);
  require_base(ideal, n, op);
  if (ideal.r == 1) {
    throw std::invalid_argument("factor_out_unit_generators: r = 1 leaves no factors");
  }

  Assignment unit;
  unit.emplace(JetVar(n, 0), Polynomial(Rational(1)));
  for (std::uint32_t j = 1; j <= ideal.m; ++j) {
    unit.emplace(JetVar(n, j), Polynomial());
  }

  UnitFactorization out;
  out.dropped_base = n;
  out.reduced.kind = JetIdeal::Kind::monomial_hypersurface;
  out.reduced.r = ideal.r - 1;
  out.reduced.m = ideal.m;
  for (std::uint32_t q = 0; q <= ideal.m; ++q) {
    out.reduced.generators.push_back(substitute(ideal.generators[q], unit));
    out.reduced.labels.push_back({0, q});
  }

  const auto& h = out.reduced.generators;
  for (std::uint32_t k = 0; k <= ideal.m; ++k) {
    Polynomial rhs;
    for (std::uint32_t q = 0; q <= k; ++q) {
      rhs += Polynomial::variable(JetVar(n, k - q)) * h[q];
    }
    out.identities.push_back({k, ideal.generators[k], std::move(rhs)});
  }
  return out;
}

JetIdeal shift_after_vanishing(const JetIdeal& ideal, std::uint32_t n) {
  constexpr const char* op = "shift_after_vanishing";
  require_hypersurface(ideal, op);
  require_base(ideal, n, op);
  if (ideal.m == 0) {
    throw std::invalid_argument("shift_after_vanishing: m must be at least 1");
  }

  const Assignment vanish{{JetVar(n, 0), Polynomial()}};
  Assignment shift;
  for (std::uint32_t q = 1; q <= ideal.m; ++q) {
    shift.emplace(JetVar(n, q), Polynomial::variable(JetVar(n, q - 1)));
  }

  JetIdeal out;
  out.kind = JetIdeal::Kind::monomial_hypersurface;
  out.r = ideal.r;
  out.m = ideal.m - 1;
  for (std::uint32_t k = 1; k <= ideal.m; ++k) {
    // Substitution is simultaneous, so x_n^(q) -> x_n^(q-1) does not chain.
    out.generators.push_back(substitute(substitute(ideal.generators[k], vanish), shift));
    out.labels.push_back({0, k - 1});
  }
  return out;
}

JetIdeal compact_bases(const JetIdeal& ideal) {
  std::set<std::uint32_t> bases;
  for (const auto& g : ideal.generators) {
    for (auto v : g.variables()) {
      bases.insert(v.base);
    }
  }
  std::map<std::uint32_t, std::uint32_t> rename;
  std::uint32_t next = 1;
  for (auto b : bases) {
    rename.emplace(b, next++);
  }
  JetIdeal out = ideal;
  out.generators.clear();
  for (const auto& g : ideal.generators) {
    Polynomial renamed;
    for (const auto& [mono, coeff] : g.terms()) {
      std::vector<Monomial::Entry> entries;
      for (const auto& [var, exp] : mono.entries()) {
        entries.emplace_back(JetVar(rename.at(var.base), var.order), exp);
      }
      renamed.add_term(coeff, Monomial(std::move(entries)));
    }
    out.generators.push_back(std::move(renamed));
  }
  return out;
}

}  // namespace jetmult::jet
