#pragma once

#include <vector>

#include "factorlab/factor.hpp"
#include "factorlab/lengths.hpp"
#include "factorlab/monoid.hpp"
#include "factorlab/omega.hpp"

namespace factorlab {

// Brute-force reference paths mirroring the fast implementations, written as
// literal exhaustive searches with no shared machinery so that agreement
// between the two is evidence rather than tautology. Each per-element oracle
// refuses elements above a ceiling (CeilingExceeded), since the searches may
// be exponentially slower than what they check.

// frobenius + 3 * lcm(smallest, largest generator)
Element default_oracle_ceiling(const Monoid& monoid);

// ceiling < 0 selects default_oracle_ceiling(monoid) in all four.
std::vector<Factorization> naive_factorizations(const Monoid& monoid, Element n,
                                                Element ceiling = -1);
LengthSet naive_length_set(const Monoid& monoid, Element n, Element ceiling = -1);
BulletSet naive_bullets(const Monoid& monoid, Element n, Element ceiling = -1);
Element naive_catenary(const Monoid& monoid, Element n, Element ceiling = -1);

// Scans every element up to the bound for a disconnected factorization
// graph. Unlike betti_elements, makes no claim past the bound.
BettiSet naive_betti(const Monoid& monoid, Element bound);

}  // namespace factorlab
