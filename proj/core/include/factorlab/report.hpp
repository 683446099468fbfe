#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factorlab/chains.hpp"
#include "factorlab/factor.hpp"
#include "factorlab/lengths.hpp"
#include "factorlab/monoid.hpp"
#include "factorlab/omega.hpp"

namespace factorlab {

struct BettiEntry {
  Element element = 0;
  DeltaSet delta;
  Element catenary = 0;
};

struct ElementReport {
  Element element = 0;
  std::vector<Factorization> factorization_list;
  LengthSet lengths;
  Elasticity ratio;
  DeltaSet delta;
  Element catenary = 0;
  Element omega_value = 0;
  BulletSet bullet_set;
  Element tame = 0;
};

// Everything the report front end prints, computed once. The pieces that
// need at least two minimal generators (catenary bounds, omega by generator)
// are skipped for dimension-1 monoids.
struct InvariantReport {
  std::vector<Element> generators;
  std::vector<Element> dropped_generators;
  Element frobenius = 0;
  AperySet apery;
  std::vector<BettiEntry> betti;
  Elasticity ratio;
  MonoidDelta delta;
  bool has_pair_invariants = false;
  CatenaryBounds catenary;
  std::vector<std::pair<Element, Element>> omega_by_generator;
  std::optional<ElementReport> element;
};

// The optional element must be a nonzero member.
InvariantReport build_report(const Monoid& monoid,
                             std::optional<Element> element = std::nullopt);

// Stable JSON document, versioned via a top-level "schema": 1 field.
std::string report_json(const InvariantReport& report);
std::string report_text(const InvariantReport& report);

}  // namespace factorlab
