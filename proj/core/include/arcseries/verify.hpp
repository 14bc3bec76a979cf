#pragma once

#include <string>
#include <vector>

namespace arcs {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0.0;
};

// The ten cross-validation suites, in their canonical order.
std::vector<std::string> verify_suite_names();

// Run one suite by name, or every suite with "all".  Each suite exercises
// an independent identity: series computed through the Groebner machinery
// against closed-form products, counting against enumeration, recursions
// against their solutions, and randomised algebraic laws.
std::vector<CheckResult> run_verify_suite(const std::string& suite);

}  // namespace arcs
