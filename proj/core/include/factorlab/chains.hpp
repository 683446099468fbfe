#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "factorlab/factorization.hpp"
#include "factorlab/monoid.hpp"

namespace factorlab {

// Distance between two factorizations of the same element: subtract the
// common part, then take the larger of the two remaining lengths. A metric
// on each fiber Z(n).
Element distance(const Factorization& a, const Factorization& b);

// Least N such that any two factorizations of n are joined by a chain whose
// consecutive steps are each within distance N. 0 when |Z(n)| <= 1.
Element catenary_degree(const Monoid& monoid, Element n);

// Largest catenary degree over all elements; attained on a Betti element.
Element catenary_degree(const Monoid& monoid);

struct ChainCertificate {
  Element element = 0;
  std::vector<Factorization> steps;  // endpoints are the queried pair
  Element weight = 0;                // max consecutive distance
};

// Witness chain between two factorizations of the same element, realized
// within weight catenary_degree(monoid, n). Deterministic: reconstructed
// from the bottleneck forest with ties broken by the canonical vertex order.
ChainCertificate catenary_chain(const Monoid& monoid, const Factorization& from,
                                const Factorization& to);

struct CatenaryBounds {
  Element lower = 0;  // min catenary degree over Betti elements
  Element upper = 0;  // max catenary degree over Betti elements; equals the
                      // monoid catenary degree
};

// Every element with at least two factorizations has catenary degree within
// these bounds.
CatenaryBounds catenary_bounds_via_betti(const Monoid& monoid);

struct CatenaryProfile {
  Element bound = 0;
  std::vector<std::pair<Element, Element>> points;  // (n, c(n)), members only
  std::vector<Element> value_set;                   // sorted, deduplicated
  Element min_over_multi = 0;  // extremes over elements with >= 2
  Element max_over_multi = 0;  // factorizations (positive c(n))
  // Smallest period reproducing the trailing three lcm-length windows of the
  // series, or -1 when those windows would overlap the settling region
  // (anything at or below frobenius + lcm). Expected to divide
  // lcm(generators).
  Element observed_period = -1;
};

CatenaryProfile catenary_profile(const Monoid& monoid, Element bound);

// Closed form for the monoid catenary degree when the minimal generators
// match a recognized family; nullopt otherwise. Serves as an independent
// check on catenary_bounds_via_betti.
//
//   two generators a < b                     -> b
//   a, ah+d, ah+2d, ..., ah+kd  with
//     gcd(a,d) = 1, h >= 1, 1 <= k < a       -> ceil(a/k)*h + d
//   g_0, ..., g_k with g_i/g_{i-1} = b_i/a_i
//     in lowest terms, 2 <= a_i < b_i,
//     gcd(a_i, b_j) = 1 for i != j,
//     g_0 = a_1*...*a_k                      -> max b_i
std::optional<Element> closed_form_catenary(const Monoid& monoid);

// 0 when Z(n) has no fully supported factorization, or none with a zero
// coordinate; otherwise the least m such that every factorization with a
// zero coordinate is within distance m of some fully supported one.
Element tame_degree(const Monoid& monoid, Element n);

// Max of tame_degree over members in [1, bound]: a certified lower bound for
// the monoid tame degree. Throws BoundTooSmall when bound < the smallest
// generator.
Element tame_degree_up_to(const Monoid& monoid, Element bound);

}  // namespace factorlab
