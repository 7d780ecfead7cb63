#include "jetmult/ordering.hpp"

namespace jetmult {

std::string_view to_string(MonomialOrdering::Kind kind) {
  return kind == MonomialOrdering::Kind::lex ? "lex" : "degrevlex";
}

namespace {

// Reverse-lexicographic tie-break: scan from the smallest variable (largest
// JetVar); the monomial with the smaller exponent there is the larger one.
std::strong_ordering revlex_tail(std::span<const Monomial::Entry> a, std::span<const Monomial::Entry> b) {
  auto i = a.size();
  auto j = b.size();
  while (i > 0 && j > 0) {
    const auto& ea = a[i - 1];
    const auto& eb = b[j - 1];
    if (ea.first == eb.first) {
      if (ea.second != eb.second) {
        return ea.second < eb.second ? std::strong_ordering::greater : std::strong_ordering::less;
      }
      --i;
      --j;
    } else if (eb.first < ea.first) {
      // a has a positive exponent on a variable where b has zero.
      return std::strong_ordering::less;
    } else {
      return std::strong_ordering::greater;
    }
  }
  if (i > 0) {
    return std::strong_ordering::less;
  }
  if (j > 0) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex(std::span<const Monomial::Entry> a, std::span<const Monomial::Entry> b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      if (a[i].second != b[j].second) {
        return a[i].second <=> b[j].second;
      }
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      return std::strong_ordering::greater;
    } else {
      return std::strong_ordering::less;
    }
  }
  if (i < a.size()) {
    return std::strong_ordering::greater;
  }
  if (j < b.size()) {
    return std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_monomials(MonomialOrdering ord, const Monomial& u, const Monomial& v) {
  if (ord.kind == MonomialOrdering::Kind::lex) {
    return lex(u.entries(), v.entries());
  }
  if (auto c = u.total_degree() <=> v.total_degree(); c != 0) {
    return c;
  }
  return revlex_tail(u.entries(), v.entries());
}

}  // namespace jetmult
