#include "factorlab/serialize.hpp"

#include <cstdio>

#include <json.hpp>

namespace factorlab {
namespace {

std::string format_ratio(Element numerator, Element denominator) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g",
                static_cast<double>(numerator) / static_cast<double>(denominator));
  return buffer;
}

nlohmann::json coords_json(const std::vector<Factorization>& list) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& f : list) rows.push_back(f.coords);
  return rows;
}

}  // namespace

std::string elasticity_csv(const ElasticityProfile& profile) {
  std::string out = "n,value\n";
  for (const auto& [n, ratio] : profile.points) {
    out += std::to_string(n);
    out += ',';
    out += format_ratio(ratio.numerator, ratio.denominator);
    out += '\n';
  }
  return out;
}

std::string delta_csv(const DeltaSeries& series) {
  std::string out = "n,value\n";
  for (const auto& [n, d] : series.rows) {
    out += std::to_string(n);
    out += ',';
    out += std::to_string(d);
    out += '\n';
  }
  return out;
}

std::string catenary_csv(const CatenaryProfile& profile) {
  std::string out = "n,value\n";
  for (const auto& [n, c] : profile.points) {
    out += std::to_string(n);
    out += ',';
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

std::string omega_csv(const OmegaProfile& profile) {
  std::string out = "n,omega,residual\n";
  for (const auto& [n, value] : profile.points) {
    out += std::to_string(n);
    out += ',';
    out += std::to_string(value);
    out += ',';
    // residual = omega(n) - n / n_1
    out += format_ratio(value * profile.slope_denominator - n,
                        profile.slope_denominator);
    out += '\n';
  }
  return out;
}

std::string bullets_json(const BulletSet& set) {
  return coords_json(set.bullets).dump();
}

std::string chain_json(const ChainCertificate& cert) {
  nlohmann::ordered_json doc;
  doc["element"] = cert.element;
  doc["steps"] = coords_json(cert.steps);
  doc["weight"] = cert.weight;
  return doc.dump();
}

}  // namespace factorlab
