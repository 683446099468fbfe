#include "factorlab/omega.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>

#include "factorlab/errors.hpp"

namespace factorlab {
namespace {

// Sweeps bullet sets over all integers upward from -(frobenius + 1). Below
// that floor every set is {0}: value(x) - m is then past the Frobenius
// number for any x, so the zero vector is the unique minimal element. Only
// a window of largest_generator + 1 sets is kept live.
class BulletSweeper {
 public:
  explicit BulletSweeper(const Monoid& monoid)
      : monoid_(monoid),
        floor_(-(monoid.frobenius() + 1)),
        next_(floor_ + 1),
        ring_(static_cast<std::size_t>(monoid.largest_generator()) + 1) {
    zero_.push_back(
        Factorization::of(monoid, std::vector<Element>(monoid.dimension(), 0)));
  }

  Element floor() const { return floor_; }
  Element position() const { return next_ - 1; }  // last computed integer

  const std::vector<Factorization>& set_at_floor() const { return zero_; }

  // Computes the bullet set of position() + 1 and steps forward.
  const std::vector<Factorization>& advance() {
    Element m = next_++;
    const auto& gens = monoid_.generators();
    auto& out = ring_[slot(m)];
    out.clear();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (const Factorization& a : at(m - gens[i])) {
        Factorization c = a;
        if (!monoid_.contains(a.value - m)) {
          // a itself no longer reaches a member; pad with one more n_i.
          c.coords[i] += 1;
          c.value += gens[i];
        }
        if (is_minimal(c, m)) out.push_back(c);
      }
    }
    std::sort(out.begin(), out.end(),
              [](const Factorization& a, const Factorization& b) {
                return rev_lex_less(a, b);
              });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  // Dropping any used generator must break membership of value(c) - m.
  bool is_minimal(const Factorization& c, Element m) const {
    const auto& gens = monoid_.generators();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (c.coords[j] > 0 && monoid_.contains(c.value - gens[j] - m)) {
        return false;
      }
    }
    return true;
  }

  const std::vector<Factorization>& at(Element m) const {
    return m <= floor_ ? zero_ : ring_[slot(m)];
  }

  std::size_t slot(Element m) const {
    Element size = static_cast<Element>(ring_.size());
    return static_cast<std::size_t>(((m % size) + size) % size);
  }

  const Monoid& monoid_;
  Element floor_;
  Element next_;
  std::vector<std::vector<Factorization>> ring_;
  std::vector<Factorization> zero_;
};

Element max_length_of(const std::vector<Factorization>& bullets) {
  Element best = 0;
  for (const auto& b : bullets) best = std::max(best, b.length());
  return best;
}

}  // namespace

Element BulletSet::max_length() const { return max_length_of(bullets); }

BulletSet bullets(const Monoid& monoid, Element n) {
  if (n < 0 || !monoid.contains(n)) {
    raise(ErrorCode::NotAMember, std::to_string(n) + " is not in the monoid");
  }
  BulletSet result;
  result.element = n;
  BulletSweeper sweeper(monoid);
  if (n <= sweeper.floor()) {
    result.bullets = sweeper.set_at_floor();
    return result;
  }
  while (sweeper.position() < n - 1) sweeper.advance();
  result.bullets = sweeper.advance();
  return result;
}

Element omega(const Monoid& monoid, Element n) {
  if (n == 0) {
    raise(ErrorCode::ZeroElement, "omega of the identity is undefined");
  }
  return bullets(monoid, n).max_length();
}

Element omega_of_monoid(const Monoid& monoid) {
  if (monoid.dimension() < 2) {
    raise(ErrorCode::PreconditionViolated,
          "omega of the monoid needs at least two minimal generators");
  }
  const auto& gens = monoid.generators();
  BulletSweeper sweeper(monoid);
  Element best = 0;
  while (sweeper.position() < gens.back()) {
    const auto& set = sweeper.advance();
    if (std::binary_search(gens.begin(), gens.end(), sweeper.position())) {
      best = std::max(best, max_length_of(set));
    }
  }
  return best;
}

std::vector<std::pair<Element, Element>> omega_series(const Monoid& monoid,
                                                      Element bound) {
  std::vector<std::pair<Element, Element>> points;
  BulletSweeper sweeper(monoid);
  while (sweeper.position() < bound) {
    const auto& set = sweeper.advance();
    Element n = sweeper.position();
    if (n >= 1 && monoid.contains(n)) {
      points.emplace_back(n, max_length_of(set));
    }
  }
  return points;
}

OmegaProfile omega_profile(const Monoid& monoid, Element bound) {
  if (monoid.dimension() < 2) {
    raise(ErrorCode::PreconditionViolated,
          "the quasilinear fit needs at least two minimal generators");
  }
  const auto& gens = monoid.generators();
  Element n1 = gens[0];
  Element n2 = gens[1];

  // N_0 = n_1 (F + n_2) / (n_2 - n_1), kept exact.
  Element num = checked_mul(n1, checked_add(monoid.frobenius(), n2));
  Element den = n2 - n1;
  Element shrink = std::gcd(num, den);
  num /= shrink;
  den /= shrink;

  // Need room past the threshold: bound > N_0 + 2 n_1.
  if (checked_mul(bound - 2 * n1, den) <= num) {
    raise(ErrorCode::BoundTooSmall,
          "profile bound leaves no room past the quasilinearity threshold");
  }

  OmegaProfile profile;
  profile.bound = bound;
  profile.slope_denominator = n1;
  profile.threshold_numerator = num;
  profile.threshold_denominator = den;
  profile.residual_numerators.assign(static_cast<std::size_t>(n1), -1);
  profile.quasilinear_exact = true;

  profile.points = omega_series(monoid, bound);
  for (const auto& [n, value] : profile.points) {
    if (checked_mul(n, den) <= num) continue;  // fit promised only past N_0
    Element residual = checked_mul(value, n1) - n;
    auto& expected =
        profile.residual_numerators[static_cast<std::size_t>(n % n1)];
    if (expected < 0) {
      expected = residual;
    } else if (expected != residual) {
      profile.quasilinear_exact = false;
    }
  }

  // Smallest shift under which the residue offsets repeat; divisors of n_1
  // suffice since the offsets live on residues mod n_1.
  for (Element p = 1; p <= n1; ++p) {
    if (n1 % p != 0) continue;
    bool fits = true;
    for (Element r = 0; fits && r < n1; ++r) {
      Element a = profile.residual_numerators[static_cast<std::size_t>(r)];
      Element b =
          profile.residual_numerators[static_cast<std::size_t>((r + p) % n1)];
      fits = a < 0 || b < 0 || a == b;
    }
    if (fits) {
      profile.residual_period = p;
      break;
    }
  }
  return profile;
}

}  // namespace factorlab
