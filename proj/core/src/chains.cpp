#include "factorlab/chains.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <tuple>

#include "factorlab/errors.hpp"
#include "factorlab/factor.hpp"
#include "union_find.hpp"

namespace factorlab {
namespace {

struct Edge {
  Element weight;
  std::size_t u, v;

  friend bool operator<(const Edge& a, const Edge& b) {
    return std::tie(a.weight, a.u, a.v) < std::tie(b.weight, b.u, b.v);
  }
};

// All pairwise distances within a fiber, ascending. Vertices are indices
// into the canonical factorization order, so the edge order is canonical.
std::vector<Edge> sorted_edges(const std::vector<Factorization>& fiber) {
  std::vector<Edge> edges;
  edges.reserve(fiber.size() * (fiber.size() - 1) / 2);
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    for (std::size_t j = i + 1; j < fiber.size(); ++j) {
      edges.push_back(Edge{distance(fiber[i], fiber[j]), i, j});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

Element bottleneck(const std::vector<Factorization>& fiber) {
  if (fiber.size() <= 1) return 0;
  detail::UnionFind uf(fiber.size());
  std::size_t components = fiber.size();
  for (const Edge& e : sorted_edges(fiber)) {
    if (uf.unite(e.u, e.v) && --components == 1) return e.weight;
  }
  raise(ErrorCode::ValueMismatch, "fiber distance graph failed to connect");
}

void require_factorization_of(const Monoid& monoid, const Factorization& f) {
  if (f.coords.size() != monoid.dimension()) {
    raise(ErrorCode::DimensionMismatch,
          "factorization has " + std::to_string(f.coords.size()) +
              " coordinates, monoid has " + std::to_string(monoid.dimension()));
  }
  Element value = 0;
  for (std::size_t i = 0; i < f.coords.size(); ++i) {
    if (f.coords[i] < 0) {
      raise(ErrorCode::NegativeElement, "factorization coordinate is negative");
    }
    value = checked_add(value, checked_mul(f.coords[i], monoid.generators()[i]));
  }
  if (value != f.value) {
    raise(ErrorCode::ValueMismatch,
          "coordinates sum to " + std::to_string(value) + ", value field says " +
              std::to_string(f.value));
  }
}

}  // namespace

Element distance(const Factorization& a, const Factorization& b) {
  if (a.coords.size() != b.coords.size()) {
    raise(ErrorCode::DimensionMismatch, "distance needs equal dimensions");
  }
  if (a.value != b.value) {
    raise(ErrorCode::ValueMismatch,
          "distance is defined between factorizations of the same element");
  }
  Element left = 0;
  Element right = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    Element common = std::min(a.coords[i], b.coords[i]);
    left = checked_add(left, a.coords[i] - common);
    right = checked_add(right, b.coords[i] - common);
  }
  return std::max(left, right);
}

Element catenary_degree(const Monoid& monoid, Element n) {
  if (n < 0 || !monoid.contains(n)) {
    raise(ErrorCode::NotAMember,
          std::to_string(n) + " is not in the monoid");
  }
  return bottleneck(factorizations(monoid, n));
}

Element catenary_degree(const Monoid& monoid) {
  Element best = 0;
  for (Element b : betti_elements(monoid).elements) {
    best = std::max(best, catenary_degree(monoid, b));
  }
  return best;
}

ChainCertificate catenary_chain(const Monoid& monoid, const Factorization& from,
                                const Factorization& to) {
  require_factorization_of(monoid, from);
  require_factorization_of(monoid, to);
  if (from.value != to.value) {
    raise(ErrorCode::ValueMismatch,
          "chain endpoints factor different elements");
  }

  auto fiber = factorizations(monoid, from.value);
  auto index_of = [&](const Factorization& f) {
    auto it = std::find(fiber.begin(), fiber.end(), f);
    return static_cast<std::size_t>(it - fiber.begin());
  };
  std::size_t src = index_of(from);
  std::size_t dst = index_of(to);

  ChainCertificate cert;
  cert.element = from.value;
  if (src == dst) {
    cert.steps = {fiber[src]};
    return cert;
  }

  // Grow the bottleneck forest until the endpoints meet; the unique forest
  // path is then a chain of weight at most the catenary degree.
  detail::UnionFind uf(fiber.size());
  std::vector<std::vector<std::size_t>> adjacency(fiber.size());
  for (const Edge& e : sorted_edges(fiber)) {
    if (!uf.unite(e.u, e.v)) continue;
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
    if (uf.find(src) == uf.find(dst)) break;
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(fiber.size(), kUnset);
  std::vector<std::size_t> stack = {src};
  parent[src] = src;
  while (!stack.empty()) {
    std::size_t at = stack.back();
    stack.pop_back();
    if (at == dst) break;
    for (std::size_t next : adjacency[at]) {
      if (parent[next] == kUnset) {
        parent[next] = at;
        stack.push_back(next);
      }
    }
  }

  std::vector<std::size_t> path;
  for (std::size_t at = dst; at != src; at = parent[at]) path.push_back(at);
  path.push_back(src);
  std::reverse(path.begin(), path.end());

  for (std::size_t i = 0; i < path.size(); ++i) {
    cert.steps.push_back(fiber[path[i]]);
    if (i > 0) {
      cert.weight =
          std::max(cert.weight, distance(cert.steps[i - 1], cert.steps[i]));
    }
  }
  return cert;
}

CatenaryBounds catenary_bounds_via_betti(const Monoid& monoid) {
  if (monoid.dimension() < 2) {
    raise(ErrorCode::PreconditionViolated,
          "catenary bounds need at least two minimal generators");
  }
  CatenaryBounds bounds;
  bool first = true;
  for (Element b : betti_elements(monoid).elements) {
    Element c = catenary_degree(monoid, b);
    bounds.lower = first ? c : std::min(bounds.lower, c);
    bounds.upper = first ? c : std::max(bounds.upper, c);
    first = false;
  }
  return bounds;
}

CatenaryProfile catenary_profile(const Monoid& monoid, Element bound) {
  if (bound < monoid.smallest_generator()) {
    raise(ErrorCode::BoundTooSmall,
          "profile bound is below the smallest generator");
  }
  CatenaryProfile profile;
  profile.bound = bound;

  std::vector<Element> by_element(static_cast<std::size_t>(bound) + 1, -1);
  bool any_multi = false;
  for (Element n = 1; n <= bound; ++n) {
    if (!monoid.contains(n)) continue;
    Element c = catenary_degree(monoid, n);
    by_element[static_cast<std::size_t>(n)] = c;
    profile.points.emplace_back(n, c);
    profile.value_set.push_back(c);
    if (c > 0) {
      profile.min_over_multi =
          any_multi ? std::min(profile.min_over_multi, c) : c;
      profile.max_over_multi = std::max(profile.max_over_multi, c);
      any_multi = true;
    }
  }
  std::sort(profile.value_set.begin(), profile.value_set.end());
  profile.value_set.erase(
      std::unique(profile.value_set.begin(), profile.value_set.end()),
      profile.value_set.end());

  Element window = 1;
  for (Element g : monoid.generators()) window = checked_lcm(window, g);
  Element span = checked_mul(3, window);
  Element frob = monoid.frobenius();
  // The series settles only past frob + window (elements below that can
  // still have fewer factorizations than their translates), so the measured
  // trailing span must start above that line.
  if (bound >= checked_add(frob, checked_add(window, span))) {
    Element lo = bound - span + 1;
    for (Element p = 1; p <= window && profile.observed_period < 0; ++p) {
      bool periodic = true;
      for (Element n = lo; n + p <= bound && periodic; ++n) {
        periodic = by_element[static_cast<std::size_t>(n)] ==
                   by_element[static_cast<std::size_t>(n + p)];
      }
      if (periodic) profile.observed_period = p;
    }
  }
  return profile;
}

std::optional<Element> closed_form_catenary(const Monoid& monoid) {
  const auto& gens = monoid.generators();
  if (gens.size() == 2) return gens[1];
  if (gens.size() < 3) return std::nullopt;

  // a, ah+d, ..., ah+kd with gcd(a,d) = 1, h >= 1, 1 <= k < a.
  {
    Element a = gens[0];
    Element steps = static_cast<Element>(gens.size()) - 1;
    Element d = gens[2] - gens[1];
    bool match = d >= 1 && steps < a && std::gcd(a, d) == 1;
    for (std::size_t i = 2; match && i < gens.size(); ++i) {
      match = gens[i] - gens[i - 1] == d;
    }
    if (match && (gens[1] - d) % a == 0) {
      Element h = (gens[1] - d) / a;
      if (h >= 1) return checked_add(checked_mul((a + steps - 1) / steps, h), d);
    }
  }

  // g_0, ..., g_k with g_i/g_{i-1} = b_i/a_i reduced, 2 <= a_i < b_i,
  // gcd(a_i, b_j) = 1 for i != j, g_0 = prod a_i.
  {
    std::size_t k = gens.size() - 1;
    std::vector<Element> a(k), b(k);
    bool match = true;
    Element product = 1;
    for (std::size_t i = 0; match && i < k; ++i) {
      Element g = std::gcd(gens[i + 1], gens[i]);
      b[i] = gens[i + 1] / g;
      a[i] = gens[i] / g;
      match = a[i] >= 2 && a[i] < b[i];
      if (match) product = checked_mul(product, a[i]);
    }
    match = match && product == gens[0];
    for (std::size_t i = 0; match && i < k; ++i) {
      for (std::size_t j = 0; match && j < k; ++j) {
        match = i == j || std::gcd(a[i], b[j]) == 1;
      }
    }
    if (match) return *std::max_element(b.begin(), b.end());
  }
  return std::nullopt;
}

Element tame_degree(const Monoid& monoid, Element n) {
  if (n < 0 || !monoid.contains(n)) {
    raise(ErrorCode::NotAMember,
          std::to_string(n) + " is not in the monoid");
  }
  auto fiber = factorizations(monoid, n);
  std::vector<const Factorization*> full;
  std::vector<const Factorization*> partial;
  for (const auto& f : fiber) {
    bool supported = std::all_of(f.coords.begin(), f.coords.end(),
                                 [](Element c) { return c > 0; });
    (supported ? full : partial).push_back(&f);
  }
  if (full.empty() || partial.empty()) return 0;

  Element worst = 0;
  for (const auto* z : partial) {
    Element nearest = -1;
    for (const auto* f : full) {
      Element d = distance(*z, *f);
      if (nearest < 0 || d < nearest) nearest = d;
    }
    worst = std::max(worst, nearest);
  }
  return worst;
}

Element tame_degree_up_to(const Monoid& monoid, Element bound) {
  if (bound < monoid.smallest_generator()) {
    raise(ErrorCode::BoundTooSmall,
          "tame degree bound is below the smallest generator");
  }
  Element best = 0;
  for (Element n = 1; n <= bound; ++n) {
    if (monoid.contains(n)) best = std::max(best, tame_degree(monoid, n));
  }
  return best;
}

}  // namespace factorlab
