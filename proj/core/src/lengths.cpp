#include "factorlab/lengths.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "factorlab/factor.hpp"

namespace factorlab {

LengthSet length_set(const Monoid& monoid, Element n) {
  return LengthSet{n, monoid.length_row(n)};
}

Elasticity Elasticity::of(Element max_length, Element min_length) {
  Element g = std::gcd(max_length, min_length);
  return Elasticity{max_length / g, min_length / g};
}

double Elasticity::value() const {
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

bool operator<(const Elasticity& a, const Elasticity& b) {
  return checked_mul(a.numerator, b.denominator) < checked_mul(b.numerator, a.denominator);
}

Elasticity elasticity(const Monoid& monoid, Element n) {
  if (n == 0) raise(ErrorCode::ZeroElement, "elasticity of 0 is undefined");
  LengthSet ls = length_set(monoid, n < 0 ? 0 : n);
  if (n < 0 || !ls.member()) {
    raise(ErrorCode::NotAMember, std::to_string(n) + " is not an element");
  }
  return Elasticity::of(ls.max_length(), ls.min_length());
}

Elasticity monoid_elasticity(const Monoid& monoid) {
  Elasticity rho = Elasticity::of(monoid.largest_generator(), monoid.smallest_generator());
  if (monoid.dimension() > 1) {
    Element witness = checked_mul(monoid.smallest_generator(), monoid.largest_generator());
    if (!(elasticity(monoid, witness) == rho)) {
      throw std::logic_error("monoid elasticity not attained at its witness element");
    }
  }
  return rho;
}

ElasticityProfile elasticity_profile(const Monoid& monoid, Element bound) {
  if (bound < monoid.smallest_generator()) {
    raise(ErrorCode::BoundTooSmall, "profile bound admits no nonzero element");
  }
  ElasticityProfile profile;
  profile.bound = bound;
  monoid.length_row(bound);  // one bulk growth instead of per-element steps
  for (Element n = 1; n <= bound; ++n) {
    LengthSet ls = length_set(monoid, n);
    if (!ls.member()) continue;
    profile.points.emplace_back(n, Elasticity::of(ls.max_length(), ls.min_length()));
  }
  for (const auto& [n, rho] : profile.points) profile.value_set.push_back(rho);
  std::sort(profile.value_set.begin(), profile.value_set.end());
  profile.value_set.erase(std::unique(profile.value_set.begin(), profile.value_set.end()),
                          profile.value_set.end());
  return profile;
}

bool elasticity_recurrence_check(const Monoid& monoid, Element n) {
  const auto& gens = monoid.generators();
  if (gens.size() < 2) raise(ErrorCode::PreconditionViolated, "needs two generators");
  Element threshold = checked_mul(gens[gens.size() - 2], gens.back());
  if (n < threshold || !monoid.contains(n)) {
    raise(ErrorCode::PreconditionViolated,
          "identity requires a member n >= " + std::to_string(threshold));
  }
  Element period = checked_mul(gens.front(), gens.back());
  LengthSet here = length_set(monoid, n);
  LengthSet there = length_set(monoid, checked_add(n, period));
  Element lhs_num = there.max_length();
  Element lhs_den = there.min_length();
  Element rhs_num = here.max_length() + gens.back();
  Element rhs_den = here.min_length() + gens.front();
  return checked_mul(lhs_num, rhs_den) == checked_mul(rhs_num, lhs_den);
}

Element DeltaSet::gcd() const {
  Element g = 0;
  for (Element v : values) g = std::gcd(g, v);
  return g;
}

namespace {

DeltaSet delta_of_lengths(const std::vector<Element>& lengths) {
  DeltaSet delta;
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    delta.values.push_back(lengths[i] - lengths[i - 1]);
  }
  std::sort(delta.values.begin(), delta.values.end());
  delta.values.erase(std::unique(delta.values.begin(), delta.values.end()),
                     delta.values.end());
  return delta;
}

}  // namespace

DeltaSet delta_of_element(const Monoid& monoid, Element n) {
  LengthSet ls = length_set(monoid, n);
  if (!ls.member() && n != 0) {
    raise(ErrorCode::NotAMember, std::to_string(n) + " is not an element");
  }
  return delta_of_lengths(ls.lengths);
}

DeltaSeries delta_series(const Monoid& monoid, Element bound) {
  DeltaSeries series;
  series.bound = bound;
  monoid.length_row(std::max<Element>(bound, 0));
  for (Element n = 1; n <= bound; ++n) {
    for (Element d : delta_of_lengths(monoid.length_row(n)).values) {
      series.rows.emplace_back(n, d);
    }
  }
  return series;
}

MonoidDelta delta_of_monoid(const Monoid& monoid) {
  MonoidDelta result;
  if (monoid.dimension() < 2) {
    // Every length set is a singleton, so the delta set is empty.
    result.certification = Certification::Certified;
    return result;
  }

  const Element window = checked_lcm(monoid.smallest_generator(), monoid.largest_generator());
  const Element frob = std::max<Element>(monoid.frobenius(), 0);
  Element bound = checked_add(frob + 2 * monoid.largest_generator(), 3 * window) + 1;

  // Stabilization: delta(n) == delta(n + window) across two consecutive
  // windows, entirely past the Frobenius number so every n involved is a
  // member. Extend the scan until observed (or give up and stay heuristic).
  Element stable = -1;
  std::vector<DeltaSet> deltas;
  for (int attempt = 0; attempt < 64 && stable < 0; ++attempt) {
    monoid.length_row(bound);
    deltas.resize(static_cast<std::size_t>(bound) + 1);
    for (Element n = 0; n <= bound; ++n) {
      if (deltas[static_cast<std::size_t>(n)].values.empty()) {
        deltas[static_cast<std::size_t>(n)] = delta_of_lengths(monoid.length_row(n));
      }
    }
    Element hi = bound - 3 * window;  // last start with data for both windows
    Element run = 0;                  // matching positions ending just below n
    for (Element n = frob + 1; n <= bound - window && stable < 0; ++n) {
      run = (deltas[static_cast<std::size_t>(n)] ==
             deltas[static_cast<std::size_t>(n + window)])
                ? run + 1
                : 0;
      Element s = n - 2 * window + 1;
      if (run >= 2 * window && s <= hi) stable = s;
    }
    if (stable < 0) bound = checked_add(bound, window);
  }

  std::vector<Element> all;
  for (const auto& delta : deltas) {
    all.insert(all.end(), delta.values.begin(), delta.values.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  result.delta.values = std::move(all);
  result.scan_bound = bound;
  result.stable_from = stable;

  bool anchored = false;
  if (!result.delta.empty()) {
    try {
      anchored = max_delta_via_betti(monoid) == result.delta.max();
    } catch (const Error&) {
      anchored = false;
    }
  }
  bool gcd_matches = !result.delta.empty() && result.delta.gcd() == result.delta.min();
  result.certification = (stable >= 0 && anchored && gcd_matches)
                             ? Certification::Certified
                             : Certification::Heuristic;
  return result;
}

Element max_delta_via_betti(const Monoid& monoid) {
  Element best = -1;
  for (Element b : betti_elements(monoid).elements) {
    DeltaSet delta = delta_of_element(monoid, b);
    if (!delta.empty()) best = std::max(best, delta.max());
  }
  if (best < 0) {
    raise(ErrorCode::EmptyDelta, "no Betti element has two distinct lengths");
  }
  return best;
}

}  // namespace factorlab
