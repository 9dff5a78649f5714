#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rfunc {

struct PropertyResult {
    std::string name;
    int samples = 0;
    double max_violation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Randomized check of the r-functional identities, bounds, and witness
/// constructions at matrix size n (2..8). Violations are normalized so each
/// property compares directly against its stated tolerance.
std::vector<PropertyResult> run_property_suite(int n, int samples, std::uint64_t seed);

} // namespace rfunc
