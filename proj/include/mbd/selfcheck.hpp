#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mbd {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Reduced-scale consistency checks: enumeration oracle, three-way PMF
/// agreement, closed-form moments, the n = 200 trimodal example and the
/// binomial reduction.
std::vector<CheckResult> run_selfcheck(std::uint64_t seed = 12345);

}  // namespace mbd
