#pragma once

#include <string>

#include "factorlab/chains.hpp"
#include "factorlab/lengths.hpp"
#include "factorlab/omega.hpp"

namespace factorlab {

// Figure-ready emitters. Each returns complete file contents so callers can
// write in one shot; formatting is locale-independent and deterministic.

std::string elasticity_csv(const ElasticityProfile& profile);  // n,value
std::string delta_csv(const DeltaSeries& series);  // n,value per set member
std::string catenary_csv(const CatenaryProfile& profile);  // n,value
std::string omega_csv(const OmegaProfile& profile);        // n,omega,residual

std::string bullets_json(const BulletSet& set);        // array of coord arrays
std::string chain_json(const ChainCertificate& cert);  // element, steps, weight

}  // namespace factorlab
