// Acceptance gate: ten end-to-end checks over the worked examples, each
// printed as a single pass/fail line with its wall time. Exits with the
// number of failed checks.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <factorlab/chains.hpp>
#include <factorlab/factor.hpp>
#include <factorlab/lengths.hpp>
#include <factorlab/omega.hpp>
#include <factorlab/oracle.hpp>

#include "cli.hpp"

using namespace factorlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    ok = false;
    if (!note.empty()) note += "; ";
    note += why;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string show(const std::vector<Element>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

Element brute_frobenius(Element a, Element b) {
  Element worst = -1;
  for (Element n = 0; n <= a * b; ++n) {
    bool hit = false;
    for (Element x = 0; x * a <= n && !hit; ++x) hit = (n - x * a) % b == 0;
    if (!hit) worst = n;
  }
  return worst;
}

const std::vector<std::vector<Element>> kTestMonoids = {
    {6, 9, 20},  {7, 10},        {2, 3},          {7, 10, 13, 16},
    {4, 13, 19}, {11, 25, 29},   {11, 36, 39},    {17, 33, 53, 71},
    {20, 21, 45}, {5, 8, 11},
};

Outcome frobenius_numbers() {
  Outcome out;
  out.expect(Monoid::from_generators({6, 9, 20}).frobenius() == 43,
             "frobenius of <6,9,20> is not 43");
  std::mt19937 rng(101);
  std::uniform_int_distribution<Element> pick(2, 50);
  int done = 0;
  while (done < 30) {
    Element a = pick(rng), b = pick(rng);
    if (a == b || std::gcd(a, b) != 1) continue;
    ++done;
    Element got = Monoid::from_generators({a, b}).frobenius();
    if (got != a * b - a - b || got != brute_frobenius(a, b)) {
      out.fail("pair formula off at <" + std::to_string(a) + "," +
               std::to_string(b) + ">");
    }
  }
  return out;
}

Outcome factorization_sets() {
  Outcome out;
  auto m713 = Monoid::from_generators({7, 10, 13});
  auto z20 = factorizations(m713, 20);
  out.expect(z20.size() == 2 && z20[0].coords == std::vector<Element>{0, 2, 0} &&
                 z20[1].coords == std::vector<Element>{1, 0, 1},
             "Z(20) in <7,10,13> is not {(1,0,1),(0,2,0)}");

  auto mc = Monoid::from_generators({6, 9, 20});
  auto z60 = factorizations(mc, 60);
  for (auto want : {std::vector<Element>{0, 0, 3}, {10, 0, 0}, {4, 4, 0}}) {
    bool found = false;
    for (const auto& f : z60) found = found || f.coords == want;
    out.expect(found, "Z(60) misses " + show(want));
  }
  return out;
}

Outcome length_recurrence() {
  Outcome out;
  auto m = Monoid::from_generators({6, 9, 20});
  out.expect(length_set(m, 60).lengths == std::vector<Element>{3, 7, 8, 9, 10},
             "L(60) wrong");
  std::set<Element> merged;
  for (Element g : {6, 9, 20}) {
    for (Element l : length_set(m, 60 - g).lengths) merged.insert(l + 1);
  }
  out.expect(std::vector<Element>(merged.begin(), merged.end()) ==
                 length_set(m, 60).lengths,
             "one dynamic step does not assemble L(60)");
  return out;
}

Outcome elasticity_extremes() {
  Outcome out;
  struct Case {
    std::vector<Element> gens;
    Element num, den;
  };
  for (const auto& c : {Case{{20, 21, 45}, 9, 4}, Case{{7, 10, 13, 16}, 16, 7}}) {
    auto m = Monoid::from_generators(c.gens);
    auto top = monoid_elasticity(m);
    out.expect(top == Elasticity{c.num, c.den}, "monoid elasticity wrong");
    Element period = std::lcm(m.smallest_generator(), m.largest_generator());
    for (Element n = 1; n <= 2000; ++n) {
      if (!m.contains(n)) continue;
      bool attained = elasticity(m, n) == top;
      if (attained != (n % period == 0)) {
        out.fail("peak not exactly on lcm multiples at n=" + std::to_string(n));
        break;
      }
    }
  }
  for (auto gens : {std::vector<Element>{6, 9, 20}, {7, 10}, {11, 25, 29}}) {
    auto m = Monoid::from_generators(gens);
    const auto& g = m.generators();
    Element lo = g[g.size() - 2] * g.back();
    Element hi = lo + 3 * g.front() * g.back();
    for (Element n = lo; n <= hi; ++n) {
      if (m.contains(n) && !elasticity_recurrence_check(m, n)) {
        out.fail("length step identity fails at n=" + std::to_string(n) +
                 " in <" + show(gens) + ">");
        break;
      }
    }
  }
  return out;
}

Outcome truncated_value_sets() {
  Outcome out;
  auto a = Monoid::from_generators({6, 10, 13, 14});
  auto b = Monoid::from_generators({6, 11, 13, 14});
  auto pa = elasticity_profile(a, 500);
  auto pb = elasticity_profile(b, 500);
  out.expect(pa.value_set == pb.value_set,
             "elasticity value sets diverge below 500");

  const std::vector<Element> want = {4, 6};
  bool in_a = false, in_b = false;
  for (Element n = 1; n <= 500; ++n) {
    if (length_set(a, n).lengths == want) in_a = true;
    if (length_set(b, n).lengths == want) in_b = true;
  }
  out.expect(in_a, "{4,6} never occurs as a length set in <6,10,13,14>");
  out.expect(!in_b, "{4,6} occurs as a length set in <6,11,13,14>");
  return out;
}

Outcome delta_sets() {
  Outcome out;
  auto big = Monoid::from_generators({17, 33, 53, 71});
  auto d = delta_of_monoid(big);
  out.expect(d.delta.values == std::vector<Element>{2, 4, 6},
             "delta of <17,33,53,71> is not {2,4,6}");
  out.expect(d.certification == Certification::Certified,
             "delta of <17,33,53,71> failed to certify");

  std::vector<Element> sixes;
  for (const auto& [n, v] : delta_series(big, 1500).rows) {
    if (v == 6) sixes.push_back(n);
  }
  out.expect(sixes == std::vector<Element>{266, 283, 300},
             "value 6 occurs at " + show(sixes));

  for (Element n = 319; n <= 319 + 3 * std::lcm<Element>(17, 71); ++n) {
    auto here = delta_of_element(big, n);
    auto there = delta_of_element(big, n + 17);
    if (!(here == there)) {
      out.fail("delta(n)=delta(n+17) fails first at n=" + std::to_string(n) +
               ": " + show(here.values) + " vs " + show(there.values));
      break;
    }
  }

  std::mt19937 rng(2024);
  std::uniform_int_distribution<Element> pa(3, 9), pd(1, 6);
  int done = 0;
  while (done < 5) {
    Element a = pa(rng), step = pd(rng);
    if (std::gcd(a, step) != 1) continue;
    Element k = std::uniform_int_distribution<Element>(1, a - 1)(rng);
    std::vector<Element> gens = {a};
    for (Element j = 1; j <= k; ++j) gens.push_back(a + j * step);
    auto m = Monoid::from_generators(gens);
    if (m.generators() != gens) continue;
    ++done;
    if (delta_of_monoid(m).delta.values != std::vector<Element>{step}) {
      out.fail("arithmetic sequence " + show(gens) + " delta is not {" +
               std::to_string(step) + "}");
    }
  }

  for (const auto& gens : kTestMonoids) {
    auto m = Monoid::from_generators(gens);
    auto dm = delta_of_monoid(m);
    if (dm.delta.empty()) {
      out.fail("empty delta for " + show(gens));
      continue;
    }
    if (dm.delta.min() != dm.delta.gcd()) {
      out.fail("min != gcd for " + show(gens));
    }
    if (dm.delta.max() != max_delta_via_betti(m)) {
      out.fail("max not anchored on a betti element for " + show(gens));
    }
  }
  return out;
}

Outcome betti_catenary() {
  Outcome out;
  auto m = Monoid::from_generators({11, 25, 29});
  out.expect(betti_elements(m).elements == std::vector<Element>{58, 150, 154},
             "betti set of <11,25,29> wrong");
  out.expect(catenary_degree(m, 58) == 4 && catenary_degree(m, 150) == 12 &&
                 catenary_degree(m, 154) == 14,
             "betti catenary degrees are not (4,12,14)");
  out.expect(catenary_degree(m, 175) == 11, "c(175) != 11");
  out.expect(catenary_degree(Monoid::from_generators({11, 36, 39}), 450) == 16,
             "c(450) != 16 in <11,36,39>");

  auto prof = catenary_profile(Monoid::from_generators({7, 10, 13, 16}), 400);
  out.expect(prof.value_set == std::vector<Element>{0, 2, 6},
             "catenary value set of <7,10,13,16> is " + show(prof.value_set));

  std::mt19937 rng(777);
  std::uniform_int_distribution<Element> pa(3, 9), pd(1, 6), ph(1, 3);
  int done = 0;
  while (done < 10) {
    Element a = pa(rng), step = pd(rng), h = ph(rng);
    if (std::gcd(a, step) != 1) continue;
    Element k = std::uniform_int_distribution<Element>(1, a - 1)(rng);
    std::vector<Element> gens = {a};
    for (Element j = 1; j <= k; ++j) gens.push_back(a * h + j * step);
    auto sample = Monoid::from_generators(gens);
    if (sample.generators() != gens) continue;
    ++done;
    auto cf = closed_form_catenary(sample);
    if (!cf || *cf != catenary_bounds_via_betti(sample).upper) {
      out.fail("closed form disagrees on " + show(gens));
    }
  }
  std::uniform_int_distribution<Element> pg(2, 60);
  done = 0;
  while (done < 5) {
    Element a = pg(rng), b = pg(rng);
    if (a >= b || std::gcd(a, b) != 1) continue;
    ++done;
    auto pair = Monoid::from_generators({a, b});
    auto cf = closed_form_catenary(pair);
    if (!cf || *cf != catenary_bounds_via_betti(pair).upper) {
      out.fail("closed form disagrees on <" + std::to_string(a) + "," +
               std::to_string(b) + ">");
    }
  }
  return out;
}

Outcome omega_primality() {
  Outcome out;
  auto m = Monoid::from_generators({6, 9, 20});
  using F = std::vector<std::vector<Element>>;
  auto coords = [](const BulletSet& set) {
    F list;
    for (const auto& b : set.bullets) list.push_back(b.coords);
    return list;
  };
  out.expect(coords(bullets(m, 40)) ==
                 F{{10, 0, 0}, {7, 2, 0}, {4, 4, 0}, {1, 6, 0}, {0, 8, 0}, {0, 0, 2}},
             "bullets of 40 wrong");
  out.expect(coords(bullets(m, 51)) ==
                 F{{10, 0, 0}, {7, 1, 0}, {4, 3, 0}, {1, 5, 0}, {0, 7, 0}, {0, 0, 3}},
             "bullets of 51 wrong");
  out.expect(coords(bullets(m, 54)) ==
                 F{{9, 0, 0}, {6, 2, 0}, {3, 4, 0}, {0, 6, 0}, {0, 0, 3}},
             "bullets of 54 wrong");
  out.expect(coords(bullets(m, 60)) ==
                 F{{10, 0, 0}, {7, 2, 0}, {4, 4, 0}, {1, 6, 0}, {0, 8, 0}, {0, 0, 3}},
             "bullets of 60 wrong");
  out.expect(omega(m, 54) == 9, "omega(54) != 9");
  out.expect(omega(m, 40) == 10 && omega(m, 51) == 10 && omega(m, 60) == 10,
             "omega of 40/51/60 is not 10");

  auto prof = omega_profile(m, 400);
  out.expect(prof.threshold_numerator == 104 && prof.threshold_denominator == 1,
             "threshold of <6,9,20> is not 104");
  out.expect(prof.quasilinear_exact, "<6,9,20> tail not exactly quasilinear");

  auto quad = omega_profile(Monoid::from_generators({4, 13, 19}), 400);
  out.expect(quad.quasilinear_exact, "<4,13,19> tail not exactly quasilinear");
  out.expect(quad.residual_period == 4,
             "residue offsets of <4,13,19> have period " +
                 std::to_string(quad.residual_period));

  for (const auto& gens : kTestMonoids) {
    auto s = Monoid::from_generators(gens);
    if (catenary_degree(s) > omega_of_monoid(s)) {
      out.fail("catenary exceeds omega on " + show(gens));
    }
  }
  return out;
}

// The naive searches walk coordinate boxes whose volume grows with both the
// element and the generator count, so each monoid carries explicit scopes
// keeping the oracle side tractable; the small monoids run to the full
// default ceiling on every invariant.
Outcome oracle_agreement() {
  Outcome out;
  struct Scope {
    std::vector<Element> gens;
    Element enumerate_to, bullets_to, catenary_to, betti_to;
  };
  const std::vector<Scope> scopes = {
      {{6, 9, 20}, -1, -1, -1, 332},
      {{7, 10}, -1, -1, -1, 80},
      {{2, 3}, -1, -1, -1, 20},
      {{4, 13, 19}, -1, -1, -1, 100},
      {{7, 10, 13, 16}, -1, 150, 300, 100},
      {{11, 25, 29}, -1, 300, 400, 200},
      {{11, 36, 39}, 800, 250, 300, 300},
      {{17, 33, 53, 71}, 600, 120, 400, 400},
  };
  for (const auto& scope : scopes) {
    auto m = Monoid::from_generators(scope.gens);
    Element ceiling = default_oracle_ceiling(m);
    Element enumerate_to =
        scope.enumerate_to < 0 ? ceiling : scope.enumerate_to;
    Element bullets_to = scope.bullets_to < 0 ? ceiling : scope.bullets_to;
    Element catenary_to = scope.catenary_to < 0 ? ceiling : scope.catenary_to;

    for (Element n = 0; n <= enumerate_to; ++n) {
      if (!(naive_factorizations(m, n, enumerate_to) == factorizations(m, n))) {
        out.fail("factorizations diverge at n=" + std::to_string(n) + " in " +
                 show(scope.gens));
        break;
      }
      if (naive_length_set(m, n, enumerate_to).lengths !=
          length_set(m, n).lengths) {
        out.fail("length sets diverge at n=" + std::to_string(n) + " in " +
                 show(scope.gens));
        break;
      }
    }
    for (Element n = 1; n <= bullets_to; ++n) {
      if (!m.contains(n)) continue;
      if (!(naive_bullets(m, n, bullets_to).bullets == bullets(m, n).bullets)) {
        out.fail("bullets diverge at n=" + std::to_string(n) + " in " +
                 show(scope.gens));
        break;
      }
    }
    for (Element n = 1; n <= catenary_to; ++n) {
      if (!m.contains(n)) continue;
      if (naive_catenary(m, n, catenary_to) != catenary_degree(m, n)) {
        out.fail("catenary diverges at n=" + std::to_string(n) + " in " +
                 show(scope.gens));
        break;
      }
    }
    std::vector<Element> expected;
    for (Element b : betti_elements(m).elements) {
      if (b <= scope.betti_to) expected.push_back(b);
    }
    if (naive_betti(m, scope.betti_to).elements != expected) {
      out.fail("betti scan diverges in " + show(scope.gens));
    }
  }

  std::ostringstream sink;
  int code = cli::run({"oracle", "--gens", "6,9,20"}, sink, sink);
  out.expect(code == 0, "oracle subcommand exited " + std::to_string(code));
  return out;
}

Outcome asymptotics() {
  Outcome out;
  auto m = Monoid::from_generators({6, 9, 20});
  double ratio =
      static_cast<double>(denumerant(m, 10000)) * 2.0 * 6 * 9 * 20 / 1e8;
  out.expect(ratio > 0.9 && ratio < 1.1,
             "denumerant leading-term ratio is " + std::to_string(ratio));

  struct Case {
    std::vector<Element> gens;
    Element bound;
  };
  for (const auto& c : {Case{{2, 3}, 40}, Case{{7, 10}, 350}, Case{{6, 9, 20}, 800}}) {
    auto s = Monoid::from_generators(c.gens);
    Element window = 1;
    for (Element g : s.generators()) window = std::lcm(window, g);
    Element period = catenary_profile(s, c.bound).observed_period;
    if (period < 1 || window % period != 0) {
      out.fail("observed catenary period " + std::to_string(period) + " on " +
               show(c.gens) + " does not divide " + std::to_string(window));
    }
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    Outcome (*check)();
  };
  const Criterion criteria[] = {
      {"frobenius numbers", 1, frobenius_numbers},
      {"factorization sets", 1, factorization_sets},
      {"length sets via the dynamic recurrence", 1, length_recurrence},
      {"elasticity extremes and the lcm step identity", 5, elasticity_extremes},
      {"truncated elasticity value sets coincide", 10, truncated_value_sets},
      {"delta sets", 60, delta_sets},
      {"betti elements and catenary degrees", 30, betti_catenary},
      {"omega primality and quasilinear growth", 30, omega_primality},
      {"fast paths agree with the oracles", 120, oracle_agreement},
      {"denumerant leading term and catenary periodicity", 20, asymptotics},
  };

  int failures = 0;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    Outcome outcome = criterion.check();
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start).count();
    if (seconds > criterion.budget_seconds) {
      outcome.fail("over the " + std::to_string(criterion.budget_seconds) +
                   "s budget");
    }
    failures += outcome.ok ? 0 : 1;
    std::printf("[%s] %2d %s (%.2fs)%s%s\n", outcome.ok ? "PASS" : "FAIL",
                index, criterion.name, seconds, outcome.note.empty() ? "" : "  ",
                outcome.note.c_str());
  }
  return failures;
}
