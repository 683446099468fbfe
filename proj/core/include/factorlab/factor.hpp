#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "factorlab/factorization.hpp"

namespace factorlab {

/// All factorizations of n, in canonical order (see rev_lex_less).
/// Raises NegativeElement. Empty exactly when n is not a member.
std::vector<Factorization> factorizations(const Monoid& monoid, Element n);

/// Number of factorizations of n, by a rolling coin-change count.
/// Counts that would overflow int64 raise Overflow. Raises NegativeElement.
Element denumerant(const Monoid& monoid, Element n);

/// The graph on Z(n) whose edges join factorizations sharing a generator:
/// u ~ v when some coordinate is positive in both. Components are grouped
/// by linking, per generator index, all vertices using that generator, so
/// building the graph costs O(|Z(n)| * dimension).
struct FactorGraph {
  Element element = 0;
  std::vector<Factorization> vertices;   // canonical order
  std::vector<std::size_t> component;    // per-vertex component id, 0-based
  std::size_t component_count = 0;

  bool adjacent(std::size_t u, std::size_t v) const;
  bool connected() const { return component_count <= 1; }
};

FactorGraph factor_graph(const Monoid& monoid, Element n);

/// Elements whose factor graph is disconnected, found by scanning every
/// member up to frobenius() + 2 * largest_generator(). The bound is
/// complete: for n above it, every n - g_i - g_j is a member, so any two
/// factorizations are joined through one that uses both g_i and g_j.
struct BettiSet {
  std::vector<Element> elements;
  Element scan_bound = 0;
};

BettiSet betti_elements(const Monoid& monoid);

/// A claimed identity between two exponent vectors over unknown generators.
using Relation = std::pair<std::vector<Element>, std::vector<Element>>;

/// Solves for positive generators (unique up to scale, normalized to gcd 1)
/// satisfying every relation, then minimalizes them. Raises
/// DimensionMismatch, Underdetermined (solution space too large) and
/// Inconsistent (no positive solution).
Monoid recover_generators(const std::vector<Relation>& relations, std::size_t dimension);

}  // namespace factorlab
