#pragma once

#include <string>
#include <vector>

namespace cdp {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // filled on failure or for notable outcomes
};

/// The bundled reproduction checks: every worked example, golden structure
/// and reference table exercised end to end.  Deterministic (fixed seeds).
std::vector<CheckResult> reproduce_all();

}  // namespace cdp
