// Acceptance gate: runs every cross-validation suite and prints one line
// per criterion.  Exit status 0 only if all of them hold.
#include <cstdio>
#include <exception>
#include <vector>

#include "arcseries/verify.hpp"

int main() {
    std::vector<arcs::CheckResult> results;
    try {
        results = arcs::run_verify_suite("all");
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
        return 1;
    }
    bool all_ok = true;
    int i = 0;
    for (const arcs::CheckResult& r : results) {
        ++i;
        std::printf("criterion %2d %-18s %s (%6.2fs)  %s\n", i,
                    r.name.c_str(), r.ok ? "PASS" : "FAIL", r.seconds,
                    r.detail.c_str());
        if (!r.ok) all_ok = false;
    }
    std::printf("ACCEPTANCE: %s\n", all_ok ? "PASS" : "FAIL");
    return all_ok ? 0 : 1;
}
