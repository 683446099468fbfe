#pragma once

#include <utility>
#include <vector>

#include "factorlab/factorization.hpp"
#include "factorlab/monoid.hpp"

namespace factorlab {

// Bullets of n: vectors a with value(a) - n a member while dropping any used
// generator breaks that, i.e. the coordinate-wise minimal elements of
// { x : value(x) - n in S }. Stored in canonical order; an antichain.
struct BulletSet {
  Element element = 0;
  std::vector<Factorization> bullets;

  // omega(element): bullets witness every irreducible "covering" of n, and
  // the longest one is extremal.
  Element max_length() const;
};

// Complete bullet set of n, computed by a dynamic sweep: bullets of m are
// images of bullets of m - n_i (the source a itself when value(a) - m is a
// member, a + e_i otherwise). The sweep runs over all integers upward from
// -(frobenius + 1), where every bullet set is {0}; restricting the sweep to
// members of the monoid would lose sources (6 - 9 and 6 - 20 are not members
// of <6,9,20>, yet bullets of 6 include multiples of the other generators).
BulletSet bullets(const Monoid& monoid, Element n);

// Max bullet length of n. Rejects 0 (ZeroElement) and non-members.
Element omega(const Monoid& monoid, Element n);

// Max omega over the minimal generators; needs dimension >= 2. Sits between
// the catenary degree and the tame degree of the monoid.
Element omega_of_monoid(const Monoid& monoid);

// (n, omega(n)) for every member in [1, bound]; one sequential sweep.
std::vector<std::pair<Element, Element>> omega_series(const Monoid& monoid,
                                                      Element bound);

struct OmegaProfile {
  Element bound = 0;
  std::vector<std::pair<Element, Element>> points;  // (n, omega(n)), members
  Element slope_denominator = 0;                    // omega grows like n/n_1

  // Threshold N_0 = n_1 (F + n_2) / (n_2 - n_1) as an exact fraction: beyond
  // it omega(n) = n/n_1 + a_0(n mod n_1) holds exactly.
  Element threshold_numerator = 0;
  Element threshold_denominator = 1;

  // Residue-class offsets scaled by n_1: residual_numerators[r] is
  // omega(n)*n_1 - n for tail elements n with n mod n_1 = r.
  std::vector<Element> residual_numerators;
  bool quasilinear_exact = false;  // exact fit on every point past N_0
  Element residual_period = 0;     // smallest period of the residue offsets
};

// Series of (n, omega(n)) up to the bound plus the quasilinear fit. Needs
// dimension >= 2 and bound > N_0 + 2 n_1 (BoundTooSmall otherwise).
OmegaProfile omega_profile(const Monoid& monoid, Element bound);

}  // namespace factorlab
