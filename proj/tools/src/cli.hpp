#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace factorlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;       // domain errors
inline constexpr int kExitUsage = 2;         // malformed flags
inline constexpr int kExitNonCoprime = 3;    // generators with a common factor
inline constexpr int kExitDisagreement = 4;  // oracle certification failed
inline constexpr int kExitBudget = 5;        // --budget-ms exhausted

// Full command driver; args exclude the program name. Streams are injected
// so tests can capture them.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace factorlab::cli
