#pragma once

#include <string>
#include <vector>

namespace pho::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;      // worst residual observed
    double tolerance = 0.0;  // threshold it was held against
    std::string detail;
};

struct VerifyOptions {
    bool quick = false;          // reduced grid, runs in seconds
    double tol_override = 0.0;   // > 0 replaces every check tolerance
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass = true;
    int failed = 0;
};

// Runs the oracle comparisons plus the invariant suite.
VerifyReport run_verification(const VerifyOptions& options = {});

}
