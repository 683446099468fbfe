#include "factorlab/factor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "union_find.hpp"

namespace factorlab {
namespace {

void enumerate(const std::vector<Element>& gens, std::size_t idx, Element remaining,
               std::vector<Element>& coords, std::vector<Factorization>& out, Element value) {
  if (idx == 0) {
    if (remaining % gens[0] == 0) {
      coords[0] = remaining / gens[0];
      out.push_back(Factorization{coords, value});
    }
    return;
  }
  // Ascending loop on the larger generator keeps the output canonical.
  Element g = gens[idx];
  for (Element a = 0; a * g <= remaining; ++a) {
    coords[idx] = a;
    enumerate(gens, idx - 1, remaining - a * g, coords, out, value);
  }
  coords[idx] = 0;
}

using detail::UnionFind;

// Exact rationals over checked int64, enough for small elimination problems.
struct Fraction {
  Element num = 0;
  Element den = 1;

  static Fraction of(Element n, Element d) {
    Element g = std::gcd(n, d);
    if (g != 0) {
      n /= g;
      d /= g;
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Fraction{n, d == 0 ? 1 : d};
  }
  bool zero() const { return num == 0; }
};

Fraction operator*(const Fraction& a, const Fraction& b) {
  return Fraction::of(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  Element n = checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den));
  return Fraction::of(n, checked_mul(a.den, b.den));
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  return Fraction::of(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

}  // namespace

std::vector<Factorization> factorizations(const Monoid& monoid, Element n) {
  if (n < 0) raise(ErrorCode::NegativeElement, "cannot factor a negative value");
  std::vector<Factorization> out;
  std::vector<Element> coords(monoid.dimension(), 0);
  enumerate(monoid.generators(), monoid.dimension() - 1, n, coords, out, n);
  return out;
}

Element denumerant(const Monoid& monoid, Element n) {
  if (n < 0) raise(ErrorCode::NegativeElement, "cannot factor a negative value");
  std::vector<Element> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (Element g : monoid.generators()) {
    for (Element v = g; v <= n; ++v) {
      ways[static_cast<std::size_t>(v)] = checked_add(
          ways[static_cast<std::size_t>(v)], ways[static_cast<std::size_t>(v - g)]);
    }
  }
  return ways[static_cast<std::size_t>(n)];
}

bool FactorGraph::adjacent(std::size_t u, std::size_t v) const {
  if (u == v) return false;
  const auto& a = vertices[u].coords;
  const auto& b = vertices[v].coords;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return true;
  }
  return false;
}

FactorGraph factor_graph(const Monoid& monoid, Element n) {
  FactorGraph graph;
  graph.element = n;
  graph.vertices = factorizations(monoid, n);

  const std::size_t count = graph.vertices.size();
  UnionFind uf(count);
  for (std::size_t i = 0; i < monoid.dimension(); ++i) {
    std::size_t anchor = count;
    for (std::size_t v = 0; v < count; ++v) {
      if (graph.vertices[v].coords[i] == 0) continue;
      if (anchor == count) {
        anchor = v;
      } else {
        uf.unite(anchor, v);
      }
    }
  }

  graph.component.assign(count, 0);
  std::vector<std::size_t> label(count, count);
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t root = uf.find(v);
    if (label[root] == count) label[root] = graph.component_count++;
    graph.component[v] = label[root];
  }
  return graph;
}

BettiSet betti_elements(const Monoid& monoid) {
  BettiSet result;
  result.scan_bound =
      checked_add(std::max<Element>(monoid.frobenius(), 0), 2 * monoid.largest_generator());
  for (Element n = 1; n <= result.scan_bound; ++n) {
    if (!monoid.contains(n)) continue;
    if (!factor_graph(monoid, n).connected()) result.elements.push_back(n);
  }
  return result;
}

Monoid recover_generators(const std::vector<Relation>& relations, std::size_t dimension) {
  if (dimension == 0) raise(ErrorCode::EmptyInput, "dimension must be positive");

  std::vector<std::vector<Fraction>> rows;
  for (const auto& [lhs, rhs] : relations) {
    if (lhs.size() != dimension || rhs.size() != dimension) {
      raise(ErrorCode::DimensionMismatch, "relation does not match the stated dimension");
    }
    std::vector<Fraction> row(dimension);
    bool nonzero = false;
    for (std::size_t i = 0; i < dimension; ++i) {
      row[i] = Fraction::of(checked_add(lhs[i], -rhs[i]), 1);
      nonzero = nonzero || !row[i].zero();
    }
    if (nonzero) rows.push_back(std::move(row));
  }

  // Row reduce; the generator ratios must be pinned down to a line.
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dimension && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].zero()) continue;
      Fraction factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < dimension; ++c) {
        rows[r][c] = rows[r][c] - factor * rows[rank][c];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }

  if (rank >= dimension) {
    raise(ErrorCode::Inconsistent, "relations admit no nonzero generator vector");
  }
  if (rank + 1 < dimension) {
    raise(ErrorCode::Underdetermined,
          "relations pin down only " + std::to_string(rank) + " of " +
              std::to_string(dimension - 1) + " generator ratios");
  }

  // One free column: set it to 1 and read the pivots off the reduced rows.
  std::vector<char> is_pivot(dimension, 0);
  for (std::size_t col : pivot_col) is_pivot[col] = 1;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Fraction> solution(dimension, Fraction{0, 1});
  solution[free_col] = Fraction{1, 1};
  for (std::size_t r = 0; r < rank; ++r) {
    Fraction value = Fraction{0, 1} - rows[r][free_col] / rows[r][pivot_col[r]];
    solution[pivot_col[r]] = value;
  }

  Element scale = 1;
  for (const auto& f : solution) scale = checked_lcm(scale, f.den);
  std::vector<Element> gens(dimension);
  Element common = 0;
  for (std::size_t i = 0; i < dimension; ++i) {
    gens[i] = checked_mul(solution[i].num, scale / solution[i].den);
    common = std::gcd(common, gens[i]);
  }
  if (common > 1) {
    for (auto& g : gens) g /= common;
  }
  bool all_negative = std::all_of(gens.begin(), gens.end(), [](Element g) { return g < 0; });
  if (all_negative) {
    for (auto& g : gens) g = -g;
  }
  for (Element g : gens) {
    if (g <= 0) raise(ErrorCode::Inconsistent, "relations force a non-positive generator");
  }
  return Monoid::from_generators(gens);
}

}  // namespace factorlab
