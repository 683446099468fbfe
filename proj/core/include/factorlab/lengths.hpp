#pragma once

#include <utility>
#include <vector>

#include "factorlab/monoid.hpp"

namespace factorlab {

/// Sorted set of factorization lengths of one element.
struct LengthSet {
  Element element = 0;
  std::vector<Element> lengths;

  /// Nonempty exactly when the element is a member.
  bool member() const { return !lengths.empty(); }
  Element min_length() const { return lengths.front(); }
  Element max_length() const { return lengths.back(); }
};

/// L(n) via the cached ascending recurrence on the monoid.
/// Raises NegativeElement; returns an empty set when n is not a member.
LengthSet length_set(const Monoid& monoid, Element n);

/// A reduced fraction max_length / min_length.
struct Elasticity {
  Element numerator = 1;
  Element denominator = 1;

  static Elasticity of(Element max_length, Element min_length);
  double value() const;

  friend bool operator==(const Elasticity& a, const Elasticity& b) = default;
};
bool operator<(const Elasticity& a, const Elasticity& b);

/// Elasticity of a nonzero member. Raises ZeroElement and NotAMember.
Elasticity elasticity(const Monoid& monoid, Element n);

/// The monoid's elasticity, largest_generator / smallest_generator. Also
/// confirmed against the witness element n_1 * n_k, where it is attained.
Elasticity monoid_elasticity(const Monoid& monoid);

/// Per-element elasticities for all nonzero members up to `bound`, plus the
/// sorted set of distinct values taken. Raises BoundTooSmall when bound is
/// below the smallest generator.
struct ElasticityProfile {
  Element bound = 0;
  std::vector<std::pair<Element, Elasticity>> points;
  std::vector<Elasticity> value_set;
};

ElasticityProfile elasticity_profile(const Monoid& monoid, Element bound);

/// Checks the exact step identity relating the extreme lengths of n and of
/// n + n_1 * n_k: rho(n + n_1 n_k) = (M(n) + n_k) / (m(n) + n_1).
/// Requires n in S with n >= n_{k-1} * n_k (PreconditionViolated below).
bool elasticity_recurrence_check(const Monoid& monoid, Element n);

/// Sorted successive differences within one length set.
struct DeltaSet {
  std::vector<Element> values;

  bool empty() const { return values.empty(); }
  Element min() const { return values.front(); }
  Element max() const { return values.back(); }
  Element gcd() const;

  friend bool operator==(const DeltaSet& a, const DeltaSet& b) = default;
};

/// Delta set of one member; empty when the length set is a singleton.
/// Raises NotAMember (distinguishing non-membership from unique length)
/// and NegativeElement.
DeltaSet delta_of_element(const Monoid& monoid, Element n);

/// Rows (n, d) for every member n <= bound and every d in delta(n).
struct DeltaSeries {
  Element bound = 0;
  std::vector<std::pair<Element, Element>> rows;
};

DeltaSeries delta_series(const Monoid& monoid, Element bound);

enum class Certification { Certified, Heuristic };

/// Union of the per-element delta sets, scanned until the sets repeat with
/// period lcm(n_1, n_k) across two consecutive windows past the Frobenius
/// number. Certified when that stabilization was observed, the minimum
/// equals the gcd of the set, and the maximum matches the Betti-element
/// maximum; Heuristic otherwise.
struct MonoidDelta {
  DeltaSet delta;
  Certification certification = Certification::Heuristic;
  Element scan_bound = 0;
  Element stable_from = -1;  // -1 when stabilization was not observed
};

MonoidDelta delta_of_monoid(const Monoid& monoid);

/// Maximum of delta(b) over the Betti elements b, which realizes the
/// maximum of the whole monoid's delta set. Raises EmptyDelta when every
/// Betti element has a singleton length set.
Element max_delta_via_betti(const Monoid& monoid);

}  // namespace factorlab
