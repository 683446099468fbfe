#include "factorlab/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace factorlab {
namespace {

std::string braced(const std::vector<Element>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string tuple(const std::vector<Element>& coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

std::string ratio_text(const Elasticity& ratio) {
  if (ratio.denominator == 1) return std::to_string(ratio.numerator);
  return std::to_string(ratio.numerator) + "/" + std::to_string(ratio.denominator);
}

nlohmann::ordered_json ratio_json(const Elasticity& ratio) {
  nlohmann::ordered_json doc;
  doc["numerator"] = ratio.numerator;
  doc["denominator"] = ratio.denominator;
  doc["value"] = ratio.value();
  return doc;
}

nlohmann::ordered_json coords_json(const std::vector<Factorization>& list) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& f : list) rows.push_back(f.coords);
  return rows;
}

const char* certification_name(Certification certification) {
  return certification == Certification::Certified ? "certified" : "heuristic";
}

}  // namespace

InvariantReport build_report(const Monoid& monoid, std::optional<Element> element) {
  InvariantReport report;
  report.generators = monoid.generators();
  report.dropped_generators = monoid.dropped_generators();
  report.frobenius = monoid.frobenius();
  report.apery = monoid.apery(monoid.smallest_generator());
  for (Element b : betti_elements(monoid).elements) {
    report.betti.push_back(
        BettiEntry{b, delta_of_element(monoid, b), catenary_degree(monoid, b)});
  }
  report.ratio = monoid_elasticity(monoid);
  report.delta = delta_of_monoid(monoid);
  if (monoid.dimension() >= 2) {
    report.has_pair_invariants = true;
    report.catenary = catenary_bounds_via_betti(monoid);
    for (Element g : monoid.generators()) {
      report.omega_by_generator.emplace_back(g, omega(monoid, g));
    }
  }
  if (element) {
    ElementReport block;
    block.element = *element;
    block.ratio = elasticity(monoid, *element);  // validates nonzero member
    block.factorization_list = factorizations(monoid, *element);
    block.lengths = length_set(monoid, *element);
    block.delta = delta_of_element(monoid, *element);
    block.catenary = catenary_degree(monoid, *element);
    block.omega_value = omega(monoid, *element);
    block.bullet_set = bullets(monoid, *element);
    block.tame = tame_degree(monoid, *element);
    report.element = std::move(block);
  }
  return report;
}

std::string report_json(const InvariantReport& report) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["generators"] = report.generators;
  doc["dropped_generators"] = report.dropped_generators;
  doc["frobenius"] = report.frobenius;
  doc["apery"] = {{"base", report.apery.base},
                  {"witnesses", report.apery.witnesses}};

  auto betti = nlohmann::ordered_json::array();
  for (const auto& entry : report.betti) {
    nlohmann::ordered_json row;
    row["element"] = entry.element;
    row["delta"] = entry.delta.values;
    row["catenary"] = entry.catenary;
    betti.push_back(std::move(row));
  }
  doc["betti"] = std::move(betti);

  doc["elasticity"] = ratio_json(report.ratio);
  doc["delta"] = {{"values", report.delta.delta.values},
                  {"certification", certification_name(report.delta.certification)},
                  {"scan_bound", report.delta.scan_bound},
                  {"stable_from", report.delta.stable_from}};

  if (report.has_pair_invariants) {
    doc["catenary_bounds"] = {{"lower", report.catenary.lower},
                              {"upper", report.catenary.upper}};
    auto omega_rows = nlohmann::ordered_json::array();
    for (const auto& [generator, value] : report.omega_by_generator) {
      omega_rows.push_back({{"generator", generator}, {"omega", value}});
    }
    doc["omega"] = std::move(omega_rows);
  } else {
    doc["catenary_bounds"] = nullptr;
    doc["omega"] = nullptr;
  }

  if (report.element) {
    const auto& block = *report.element;
    nlohmann::ordered_json element;
    element["n"] = block.element;
    element["factorizations"] = coords_json(block.factorization_list);
    element["length_set"] = block.lengths.lengths;
    element["elasticity"] = ratio_json(block.ratio);
    element["delta"] = block.delta.values;
    element["catenary"] = block.catenary;
    element["omega"] = block.omega_value;
    element["bullets"] = coords_json(block.bullet_set.bullets);
    element["tame_degree"] = block.tame;
    doc["element"] = std::move(element);
  } else {
    doc["element"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

std::string report_text(const InvariantReport& report) {
  std::string out;
  out += "monoid <";
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(report.generators[i]);
  }
  out += ">\n";
  if (!report.dropped_generators.empty()) {
    std::string dropped = braced(report.dropped_generators);
    out += "dropped generators " + dropped.substr(1, dropped.size() - 2) + "\n";
  }
  out += "frobenius " + std::to_string(report.frobenius) + "\n";
  out += "apery base " + std::to_string(report.apery.base) + ":";
  for (Element w : report.apery.witnesses) out += " " + std::to_string(w);
  out += "\n";
  out += "elasticity " + ratio_text(report.ratio) + "\n";
  out += "delta " + braced(report.delta.delta.values) + " " +
         certification_name(report.delta.certification);
  if (report.delta.stable_from >= 0) {
    out += ", stable from " + std::to_string(report.delta.stable_from);
  }
  out += "\n";
  if (report.has_pair_invariants) {
    out += "catenary bounds [" + std::to_string(report.catenary.lower) + ", " +
           std::to_string(report.catenary.upper) + "]\n";
  }
  for (const auto& entry : report.betti) {
    out += "betti " + std::to_string(entry.element) + "  delta " +
           braced(entry.delta.values) + "  catenary " +
           std::to_string(entry.catenary) + "\n";
  }
  for (const auto& [generator, value] : report.omega_by_generator) {
    out += "omega " + std::to_string(generator) + " -> " +
           std::to_string(value) + "\n";
  }
  if (report.element) {
    const auto& block = *report.element;
    out += "\nelement " + std::to_string(block.element) + "\n";
    out += "factorizations";
    for (const auto& f : block.factorization_list) out += " " + tuple(f.coords);
    out += "\n";
    out += "length set " + braced(block.lengths.lengths) + "\n";
    out += "elasticity " + ratio_text(block.ratio) + "\n";
    out += "delta " + braced(block.delta.values) + "\n";
    out += "catenary " + std::to_string(block.catenary) + "\n";
    out += "omega " + std::to_string(block.omega_value) + "\n";
    out += "bullets";
    for (const auto& b : block.bullet_set.bullets) out += " " + tuple(b.coords);
    out += "\n";
    out += "tame degree " + std::to_string(block.tame) + "\n";
  }
  return out;
}

}  // namespace factorlab
