#include "dense_groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace jetmult::detail {

DenseRing::DenseRing(std::vector<JetVar> vars, MonomialOrdering ord) : vars_(std::move(vars)), ord_(ord) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

int DenseRing::compare(const Exponents& a, const Exponents& b) const noexcept {
  const std::size_t n = vars_.size();
  if (ord_.kind == MonomialOrdering::Kind::lex) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (a[i] != b[i]) {
        return a[i] > b[i] ? 1 : -1;
      }
    }
    return 0;
  }
  if (a[0] != b[0]) {
    return a[0] > b[0] ? 1 : -1;
  }
  for (std::size_t i = n; i >= 1; --i) {
    if (a[i] != b[i]) {
      return a[i] < b[i] ? 1 : -1;
    }
  }
  return 0;
}

DensePoly DenseRing::from(const Polynomial& p) const {
  DensePoly out;
  out.reserve(p.size());
  for (const auto& [mono, coeff] : p.terms()) {
    Exponents e = one();
    for (const auto& [var, exp] : mono.entries()) {
      auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
      if (it == vars_.end() || *it != var) {
        throw std::invalid_argument("variable " + to_string(var) + " is not in the ring");
      }
      e[1 + static_cast<std::size_t>(it - vars_.begin())] = exp;
      e[0] += exp;
    }
    out.push_back({coeff, std::move(e)});
  }
  std::sort(out.begin(), out.end(), [this](const DenseTerm& a, const DenseTerm& b) { return compare(a.exps, b.exps) > 0; });
  return out;
}

Polynomial DenseRing::to(const DensePoly& p) const {
  Polynomial out;
  for (const auto& t : p) {
    std::vector<Monomial::Entry> entries;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exps[i + 1] > 0) {
        entries.emplace_back(vars_[i], t.exps[i + 1]);
      }
    }
    out.add_term(t.coeff, Monomial(std::move(entries)));
  }
  return out;
}

bool divides(const Exponents& a, const Exponents& b) noexcept {
  if (a[0] > b[0]) {
    return false;
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] > b[i]) {
      return false;
    }
  }
  return true;
}

namespace {

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + b[i];
  }
  return out;
}

Exponents sub(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] - b[i];
  }
  return out;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  out[0] = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    out[i] = std::max(a[i], b[i]);
    out[0] += out[i];
  }
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) {
      return false;
    }
  }
  return true;
}

void make_monic(DensePoly& p) {
  if (p.empty() || p.front().coeff == 1) {
    return;
  }
  const Rational inv = 1 / p.front().coeff;
  for (auto& t : p) {
    t.coeff *= inv;
  }
}

// p[start..] - c * x^shift * g, where the two leading terms cancel.
DensePoly cancel_head(const DenseRing& ring, const DensePoly& p, std::size_t start, const Rational& c,
                      const Exponents& shift, const DensePoly& g) {
  DensePoly out;
  out.reserve(p.size() - start + g.size());
  std::size_t i = start + 1;
  std::size_t j = 1;
  while (i < p.size() || j < g.size()) {
    if (j >= g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Exponents gj = add(g[j].exps, shift);
    int cmp = i < p.size() ? ring.compare(p[i].exps, gj) : -1;
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({Rational(-c * g[j].coeff), std::move(gj)});
      ++j;
    } else {
      Rational sum = p[i].coeff - c * g[j].coeff;
      if (sum != 0) {
        out.push_back({std::move(sum), std::move(gj)});
      }
      ++i;
      ++j;
    }
  }
  return out;
}

const DensePoly* find_divisor(const Exponents& e, const std::vector<DensePoly>& basis) {
  for (const auto& g : basis) {
    if (!g.empty() && divides(g.front().exps, e)) {
      return &g;
    }
  }
  return nullptr;
}

DensePoly s_polynomial(const DenseRing& ring, const DensePoly& f, const DensePoly& g, const Exponents& l) {
  // Both monic: S = (l / LT f) f - (l / LT g) g. Build x^a f then cancel
  // against x^b g.
  const Exponents a = sub(l, f.front().exps);
  const Exponents b = sub(l, g.front().exps);
  DensePoly lifted;
  lifted.reserve(f.size());
  for (const auto& t : f) {
    lifted.push_back({t.coeff, add(t.exps, a)});
  }
  return cancel_head(ring, lifted, 0, Rational(1), b, g);
}

}  // namespace

DensePoly normal_form(const DenseRing& ring, DensePoly p, const std::vector<DensePoly>& basis) {
  DensePoly remainder;
  std::size_t start = 0;
  while (start < p.size()) {
    const DenseTerm& head = p[start];
    if (const DensePoly* g = find_divisor(head.exps, basis)) {
      const Rational c = head.coeff / g->front().coeff;
      p = cancel_head(ring, p, start, c, sub(head.exps, g->front().exps), *g);
      start = 0;
    } else {
      remainder.push_back(std::move(p[start]));
      ++start;
    }
  }
  return remainder;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponents lcm;
};

}  // namespace

std::vector<DensePoly> buchberger(const DenseRing& ring, std::vector<DensePoly> gens, BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  // Normal selection strategy: smallest lcm first, ties broken by index.
  auto pair_less = [&ring](const Pair& a, const Pair& b) {
    if (int c = ring.compare(a.lcm, b.lcm); c != 0) {
      return c < 0;
    }
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::vector<DensePoly> basis;

  auto add_element = [&](DensePoly h) {
    make_monic(h);
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      const auto& f = basis[i];
      // Two monomials have a zero S-polynomial; coprime leading terms reduce
      // to zero by Buchberger's first criterion.
      if ((f.size() == 1 && h.size() == 1) || coprime(f.front().exps, h.front().exps)) {
        continue;
      }
      queue.insert({i, k, lcm(f.front().exps, h.front().exps)});
      pending.emplace(i, k);
      ++st.pairs_created;
    }
    basis.push_back(std::move(h));
  };

  for (auto& g : gens) {
    if (!g.empty()) {
      add_element(std::move(g));
    }
  }
  if (basis.empty()) {
    throw std::invalid_argument("buchberger: all generators are zero");
  }

  auto is_pending = [&pending](std::size_t a, std::size_t b) {
    return pending.contains({std::min(a, b), std::max(a, b)});
  };

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    // Buchberger's second (chain) criterion.
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == p.i || k == p.j) {
        continue;
      }
      redundant = divides(basis[k].front().exps, p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k);
    }
    if (redundant) {
      ++st.chain_skips;
      continue;
    }

    ++st.pairs_reduced;
    DensePoly h = normal_form(ring, s_polynomial(ring, basis[p.i], basis[p.j], p.lcm), basis);
    if (h.empty()) {
      ++st.zero_reductions;
      continue;
    }
    add_element(std::move(h));
  }

  // Minimize: drop elements whose leading monomial is a multiple of another
  // (keeping the earliest among equal leading monomials).
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ring.compare(basis[a].front().exps, basis[b].front().exps) < 0;
  });
  std::vector<DensePoly> minimal;
  for (auto idx : order) {
    const auto& lt = basis[idx].front().exps;
    bool covered = std::any_of(minimal.begin(), minimal.end(),
                               [&](const DensePoly& g) { return divides(g.front().exps, lt); });
    if (!covered) {
      minimal.push_back(std::move(basis[idx]));
    }
  }

  // Interreduce tails.
  std::vector<DensePoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<DensePoly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      if (i != k) {
        others.push_back(minimal[i]);
      }
    }
    DensePoly tail(minimal[k].begin() + 1, minimal[k].end());
    DensePoly g{minimal[k].front()};
    for (auto& t : normal_form(ring, std::move(tail), others)) {
      g.push_back(std::move(t));
    }
    reduced.push_back(std::move(g));
  }
  return reduced;
}

namespace {

std::uint64_t count_from(const std::vector<Exponents>& leading, Exponents& current, std::size_t var,
                         std::size_t nvars) {
  if (var > nvars) {
    return 1;
  }
  std::uint64_t total = 0;
  const std::uint32_t saved = current[var];
  for (std::uint32_t e = 0;; ++e) {
    current[var] = e;
    current[0] += (e == 0 ? 0 : 1);
    // Standard monomials form an order ideal, so once the monomial with the
    // remaining variables at zero is divisible, larger e stays divisible.
    bool divisible = std::any_of(leading.begin(), leading.end(), [&](const Exponents& lt) { return divides(lt, current); });
    if (divisible) {
      break;
    }
    total += count_from(leading, current, var + 1, nvars);
  }
  current[0] -= current[var] - saved;
  current[var] = saved;
  return total;
}

}  // namespace

std::optional<std::uint64_t> count_standard_monomials(const DenseRing& ring, const std::vector<Exponents>& leading) {
  if (std::any_of(leading.begin(), leading.end(), [](const Exponents& lt) { return lt[0] == 0; })) {
    return 0;
  }
  const std::size_t n = ring.nvars();
  for (std::size_t v = 1; v <= n; ++v) {
    bool has_pure_power = std::any_of(leading.begin(), leading.end(), [&](const Exponents& lt) {
      return lt[v] > 0 && lt[v] == lt[0];
    });
    if (!has_pure_power) {
      return std::nullopt;
    }
  }
  Exponents current = ring.one();
  return count_from(leading, current, 1, n);
}

namespace {

void degree_monomials(std::size_t var, std::uint32_t remaining, Exponents& current, std::size_t nvars,
                      std::vector<DensePoly>& out) {
  if (var == nvars) {
    current[var] = remaining;
    out.push_back({DenseTerm{Rational(1), current}});
    current[var] = 0;
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    current[var] = e;
    degree_monomials(var + 1, remaining - e, current, nvars, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<DensePoly> monomials_of_degree(const DenseRing& ring, std::uint32_t degree) {
  std::vector<DensePoly> out;
  const std::size_t n = ring.nvars();
  if (n == 0) {
    if (degree == 0) {
      out.push_back({DenseTerm{Rational(1), ring.one()}});
    }
    return out;
  }
  Exponents current = ring.one();
  current[0] = degree;
  degree_monomials(1, degree, current, n, out);
  return out;
}

}  // namespace jetmult::detail
