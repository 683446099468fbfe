#include "factorlab/factorization.hpp"

#include <string>

namespace factorlab {

Element Factorization::length() const {
  Element total = 0;
  for (Element c : coords) total = checked_add(total, c);
  return total;
}

Factorization Factorization::of(const Monoid& monoid, std::vector<Element> coords) {
  if (coords.size() != monoid.dimension()) {
    raise(ErrorCode::DimensionMismatch,
          "expected " + std::to_string(monoid.dimension()) + " coordinates, got " +
              std::to_string(coords.size()));
  }
  Element value = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0) raise(ErrorCode::NegativeElement, "negative coordinate");
    value = checked_add(value, checked_mul(coords[i], monoid.generators()[i]));
  }
  return Factorization{std::move(coords), value};
}

bool rev_lex_less(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    Element x = a[a.size() - 1 - i];
    Element y = b[b.size() - 1 - i];
    if (x != y) return x < y;
  }
  return a.size() < b.size();
}

bool rev_lex_less(const Factorization& a, const Factorization& b) {
  return rev_lex_less(a.coords, b.coords);
}

}  // namespace factorlab
