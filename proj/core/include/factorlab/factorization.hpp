#pragma once

#include <vector>

#include "factorlab/monoid.hpp"

namespace factorlab {

/// An exponent vector over the monoid's minimal generators, together with
/// the element it factors (the generator-weighted sum of the coordinates).
struct Factorization {
  std::vector<Element> coords;
  Element value = 0;

  Element length() const;

  /// Builds a factorization from raw coordinates, computing the value.
  /// Raises DimensionMismatch and NegativeElement on malformed input.
  static Factorization of(const Monoid& monoid, std::vector<Element> coords);

  friend bool operator==(const Factorization& a, const Factorization& b) = default;
};

/// Canonical order for factorization and bullet listings: compare
/// coordinate vectors from the last entry backwards, smaller entry first.
/// Listings therefore start at the vector richest in small generators and
/// end at the one richest in large generators.
bool rev_lex_less(const std::vector<Element>& a, const std::vector<Element>& b);
bool rev_lex_less(const Factorization& a, const Factorization& b);

}  // namespace factorlab
