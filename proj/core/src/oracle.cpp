#include "factorlab/oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "factorlab/chains.hpp"
#include "factorlab/errors.hpp"

namespace factorlab {
namespace {

void check_ceiling(const Monoid& monoid, Element n, Element ceiling) {
  if (ceiling < 0) ceiling = default_oracle_ceiling(monoid);
  if (n > ceiling) {
    raise(ErrorCode::CeilingExceeded,
          std::to_string(n) + " is above the oracle ceiling " +
              std::to_string(ceiling));
  }
}

// Walks the whole box [0, limits[0]] x ... x [0, limits[k-1]] like an
// odometer (first coordinate fastest) and hands every point to the visitor.
template <typename Visitor>
void walk_box(const std::vector<Element>& limits, Visitor&& visit) {
  std::vector<Element> point(limits.size(), 0);
  while (true) {
    visit(point);
    std::size_t pos = 0;
    while (pos < point.size() && point[pos] == limits[pos]) {
      point[pos] = 0;
      ++pos;
    }
    if (pos == point.size()) return;
    ++point[pos];
  }
}

Element ceil_div(Element a, Element b) {
  if (a <= 0) return -(-a / b);
  return (a - 1) / b + 1;
}

std::vector<Factorization> box_factorizations(const Monoid& monoid, Element n) {
  const auto& gens = monoid.generators();
  std::vector<Element> limits(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) limits[i] = n / gens[i];

  std::vector<Factorization> found;
  walk_box(limits, [&](const std::vector<Element>& point) {
    Element value = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) value += point[i] * gens[i];
    if (value == n) found.push_back(Factorization{point, value});
  });
  std::sort(found.begin(), found.end(),
            [](const Factorization& a, const Factorization& b) {
              return rev_lex_less(a, b);
            });
  return found;
}

// Complete-graph edges present after discarding weights above the cutoff;
// true when the remaining graph is connected (breadth-first walk).
bool connected_within(const std::vector<Factorization>& fiber,
                      const std::vector<std::vector<Element>>& weight,
                      Element cutoff) {
  std::vector<char> seen(fiber.size(), 0);
  std::vector<std::size_t> queue = {0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t at = queue.back();
    queue.pop_back();
    for (std::size_t next = 0; next < fiber.size(); ++next) {
      if (seen[next] || next == at) continue;
      if (weight[at][next] > cutoff) continue;
      seen[next] = 1;
      ++reached;
      queue.push_back(next);
    }
  }
  return reached == fiber.size();
}

}  // namespace

Element default_oracle_ceiling(const Monoid& monoid) {
  Element window =
      checked_lcm(monoid.smallest_generator(), monoid.largest_generator());
  return checked_add(monoid.frobenius(), checked_mul(3, window));
}

std::vector<Factorization> naive_factorizations(const Monoid& monoid, Element n,
                                                Element ceiling) {
  check_ceiling(monoid, n, ceiling);
  if (n < 0) {
    raise(ErrorCode::NegativeElement, "cannot factor a negative element");
  }
  return box_factorizations(monoid, n);
}

LengthSet naive_length_set(const Monoid& monoid, Element n, Element ceiling) {
  LengthSet set;
  set.element = n;
  for (const auto& f : naive_factorizations(monoid, n, ceiling)) {
    Element length = 0;
    for (Element c : f.coords) length += c;
    set.lengths.push_back(length);
  }
  std::sort(set.lengths.begin(), set.lengths.end());
  set.lengths.erase(std::unique(set.lengths.begin(), set.lengths.end()),
                    set.lengths.end());
  return set;
}

BulletSet naive_bullets(const Monoid& monoid, Element n, Element ceiling) {
  check_ceiling(monoid, n, ceiling);
  if (n < 0 || !monoid.contains(n)) {
    raise(ErrorCode::NotAMember, std::to_string(n) + " is not in the monoid");
  }
  const auto& gens = monoid.generators();

  // A bullet cannot use generator i more than ceil((n + F)/n_i) + 1 times:
  // removing one copy must leave a non-member, and non-members never exceed
  // the Frobenius number.
  std::vector<Element> limits(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    limits[i] = ceil_div(n + monoid.frobenius(), gens[i]) + 1;
    if (limits[i] < 0) limits[i] = 0;
  }

  std::vector<Factorization> hits;
  walk_box(limits, [&](const std::vector<Element>& point) {
    Element value = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) value += point[i] * gens[i];
    if (monoid.contains(value - n)) hits.push_back(Factorization{point, value});
  });

  auto dominates = [](const Factorization& a, const Factorization& b) {
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
      if (a.coords[i] < b.coords[i]) return false;
    }
    return true;
  };

  BulletSet set;
  set.element = n;
  for (const auto& candidate : hits) {
    bool minimal = true;
    for (const auto& other : hits) {
      if (&other != &candidate && dominates(candidate, other) &&
          candidate.coords != other.coords) {
        minimal = false;
        break;
      }
    }
    if (minimal) set.bullets.push_back(candidate);
  }
  std::sort(set.bullets.begin(), set.bullets.end(),
            [](const Factorization& a, const Factorization& b) {
              return rev_lex_less(a, b);
            });
  return set;
}

Element naive_catenary(const Monoid& monoid, Element n, Element ceiling) {
  check_ceiling(monoid, n, ceiling);
  if (n < 0 || !monoid.contains(n)) {
    raise(ErrorCode::NotAMember, std::to_string(n) + " is not in the monoid");
  }
  auto fiber = box_factorizations(monoid, n);
  if (fiber.size() <= 1) return 0;

  std::vector<std::vector<Element>> weight(fiber.size());
  Element cutoff = 0;
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    weight[i].resize(fiber.size());
    for (std::size_t j = 0; j < fiber.size(); ++j) {
      if (i == j) continue;
      weight[i][j] = distance(fiber[i], fiber[j]);
      cutoff = std::max(cutoff, weight[i][j]);
    }
  }

  // Remove edge weights from the top until the graph falls apart; the last
  // weight whose removal still left it connected is the catenary degree.
  while (cutoff > 0) {
    Element below = 0;
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      for (std::size_t j = i + 1; j < fiber.size(); ++j) {
        if (weight[i][j] < cutoff) below = std::max(below, weight[i][j]);
      }
    }
    if (!connected_within(fiber, weight, below)) return cutoff;
    cutoff = below;
  }
  return cutoff;
}

BettiSet naive_betti(const Monoid& monoid, Element bound) {
  if (bound < monoid.smallest_generator()) {
    raise(ErrorCode::BoundTooSmall,
          "scan bound is below the smallest generator");
  }
  BettiSet set;
  set.scan_bound = bound;
  for (Element n = 1; n <= bound; ++n) {
    if (!monoid.contains(n)) continue;
    auto fiber = box_factorizations(monoid, n);
    if (fiber.size() <= 1) continue;

    auto share_support = [&](std::size_t a, std::size_t b) {
      for (std::size_t i = 0; i < monoid.dimension(); ++i) {
        if (fiber[a].coords[i] > 0 && fiber[b].coords[i] > 0) return true;
      }
      return false;
    };

    std::vector<char> seen(fiber.size(), 0);
    std::vector<std::size_t> queue = {0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      std::size_t at = queue.back();
      queue.pop_back();
      for (std::size_t next = 0; next < fiber.size(); ++next) {
        if (!seen[next] && share_support(at, next)) {
          seen[next] = 1;
          ++reached;
          queue.push_back(next);
        }
      }
    }
    if (reached != fiber.size()) set.elements.push_back(n);
  }
  return set;
}

}  // namespace factorlab
