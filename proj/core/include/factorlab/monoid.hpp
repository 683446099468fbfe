#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "factorlab/errors.hpp"

namespace factorlab {

using Element = std::int64_t;

/// Least monoid element in each residue class modulo `base`.
/// witnesses[0] is always 0 and witnesses[r] = r (mod base).
struct AperySet {
  Element base = 0;
  std::vector<Element> witnesses;

  Element max() const;
};

namespace detail {
struct MonoidState;
}

/// A numerical monoid: all non-negative integer combinations of a finite
/// set of positive generators with gcd 1. Construction reduces the input to
/// the unique minimal generating set and precomputes a membership table up
/// to the Frobenius number. Instances are immutable and cheap to copy;
/// lazily grown caches are mutex-guarded, so concurrent use is safe.
class Monoid {
 public:
  /// Validates, sorts, deduplicates and minimalizes `raw`. Generators that
  /// are sums of the others are dropped and recorded (see
  /// dropped_generators()). Raises EmptyInput, ZeroGenerator, NonCoprime.
  static Monoid from_generators(const std::vector<Element>& raw);

  /// Minimal generating set, strictly increasing.
  const std::vector<Element>& generators() const;

  /// Input generators discarded during minimalization, increasing.
  const std::vector<Element>& dropped_generators() const;

  /// Number of minimal generators (the embedding dimension).
  std::size_t dimension() const;

  Element smallest_generator() const;
  Element largest_generator() const;

  /// Largest integer not in the monoid; -1 when the monoid is all of N.
  Element frobenius() const;

  /// Membership test. O(1): table lookup below the Frobenius number,
  /// trivially true above it.
  bool contains(Element n) const;

  /// Apéry set of a nonzero member `base`. Cached per base.
  /// Raises NotAMember when base is not a nonzero element.
  AperySet apery(Element base) const;

  /// All positive integers outside the monoid, increasing. The last entry,
  /// when any exist, equals frobenius().
  std::vector<Element> gaps() const;

  /// Sorted length set L(n): the sizes of all factorizations of n.
  /// Empty exactly when n is not a member (n >= 1); L(0) = {0}. Computed by
  /// the ascending recurrence L(n) = U_i (L(n - g_i) + 1) over a table
  /// cached on the monoid and grown monotonically on demand.
  /// Raises NegativeElement.
  std::vector<Element> length_row(Element n) const;

  friend bool operator==(const Monoid& a, const Monoid& b);

 private:
  explicit Monoid(std::shared_ptr<const detail::MonoidState> state);
  std::shared_ptr<const detail::MonoidState> state_;
};

}  // namespace factorlab
