#pragma once

// Exhaustive identity checks bundled with the library so an installed build
// can verify itself (`tightsf selftest`).

#include <string>
#include <vector>

namespace tightsf {

struct SuiteResult {
    std::string name;
    bool passed = true;
    long cases = 0;
    std::string detail;  // first failure, if any
};

std::vector<SuiteResult> run_selftest();

}  // namespace tightsf
