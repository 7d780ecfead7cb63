#include "jetmult/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace jetmult {

std::string to_string(JetVar v) {
  return "x" + std::to_string(v.base) + "_" + std::to_string(v.order);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (const auto& [var, exp] : entries) {
    if (exp == 0) {
      continue;
    }
    if (!entries_.empty() && entries_.back().first == var) {
      entries_.back().second += exp;
    } else {
      entries_.emplace_back(var, exp);
    }
  }
}

Monomial Monomial::of(JetVar v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.entries_.emplace_back(v, exponent);
  }
  return m;
}

std::uint32_t Monomial::exponent(JetVar v) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, const JetVar& key) { return e.first < key; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

std::uint64_t Monomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& e : entries_) {
    d += e.second;
  }
  return d;
}

std::uint64_t Monomial::jet_weight() const noexcept {
  std::uint64_t w = 0;
  for (const auto& [var, exp] : entries_) {
    w += static_cast<std::uint64_t>(var.order) * exp;
  }
  return w;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  auto it = other.entries_.begin();
  for (const auto& [var, exp] : entries_) {
    while (it != other.entries_.end() && it->first < var) {
      ++it;
    }
    if (it == other.entries_.end() || it->first != var || it->second < exp) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.emplace_back(a->first, std::max(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  if (!divisor.divides(*this)) {
    throw std::domain_error("monomial division is not exact");
  }
  Monomial out;
  auto d = divisor.entries_.begin();
  for (const auto& [var, exp] : entries_) {
    std::uint32_t sub = 0;
    if (d != divisor.entries_.end() && d->first == var) {
      sub = d->second;
      ++d;
    }
    if (exp > sub) {
      out.entries_.emplace_back(var, exp - sub);
    }
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto x = a.entries_.begin();
  auto y = b.entries_.begin();
  while (x != a.entries_.end() || y != b.entries_.end()) {
    if (y == b.entries_.end() || (x != a.entries_.end() && x->first < y->first)) {
      out.entries_.push_back(*x++);
    } else if (x == a.entries_.end() || y->first < x->first) {
      out.entries_.push_back(*y++);
    } else {
      out.entries_.emplace_back(x->first, x->second + y->second);
      ++x;
      ++y;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) {
    terms_.emplace(Monomial{}, constant);
  }
}

Polynomial Polynomial::variable(JetVar v) {
  return term(Rational(1), Monomial::of(v));
}

Polynomial Polynomial::term(const Rational& coeff, Monomial mono) {
  Polynomial p;
  if (coeff != 0) {
    p.terms_.emplace(std::move(mono), coeff);
  }
  return p;
}

Rational Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<JetVar> Polynomial::variables() const {
  std::set<JetVar> vars;
  for (const auto& [mono, coeff] : terms_) {
    for (const auto& e : mono.entries()) {
      vars.insert(e.first);
    }
  }
  return vars;
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& [mono, coeff] : terms_) {
    d = std::max(d, mono.total_degree());
  }
  return d;
}

void Polynomial::add_term(const Rational& coeff, const Monomial& mono) {
  if (coeff == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) {
    add_term(coeff, mono);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) {
    add_term(-coeff, mono);
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial out;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      out.add_term(Rational(ca * cb), ma * mb);
    }
  }
  return out;
}

Polynomial operator-(const Polynomial& p) {
  Polynomial out = p;
  for (auto& [mono, coeff] : out.terms_) {
    coeff = -coeff;
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.terms_ == b.terms_;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& p, std::uint32_t exponent) {
  Polynomial result(Rational(1));
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base *= base;
    }
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const Assignment& assignment) {
  if (assignment.empty()) {
    return p;
  }
  std::map<std::pair<JetVar, std::uint32_t>, Polynomial> powers;
  auto power_of = [&](JetVar v, std::uint32_t e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) {
      it = powers.emplace(key, pow(assignment.at(v), e)).first;
    }
    return it->second;
  };

  Polynomial out;
  for (const auto& [mono, coeff] : p.terms()) {
    std::vector<Monomial::Entry> kept;
    Polynomial image(coeff);
    for (const auto& [var, exp] : mono.entries()) {
      if (assignment.contains(var)) {
        image *= power_of(var, exp);
        if (image.is_zero()) {
          break;
        }
      } else {
        kept.emplace_back(var, exp);
      }
    }
    if (image.is_zero()) {
      continue;
    }
    out += image * Polynomial::term(Rational(1), Monomial(std::move(kept)));
  }
  return out;
}

}  // namespace jetmult
