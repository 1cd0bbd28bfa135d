#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subdiff {

// Test-harness hook: deliberately corrupts the first-order weight b_1 inside
// the weight criterion so mutation tests can confirm the battery notices.
struct FaultInjection {
    bool flip_gl_weight_sign = false;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool gated = true;  // ungated criteria are reported but never fail the battery
    std::string detail;
    double seconds = 0.0;
};

// Runs the verification battery at desk scale. Criteria never throw; an
// internal error is reported as a failure with the exception message in
// `detail`. If `progress` is set, one line per criterion is printed as it
// finishes. A nonempty `only` restricts the run to the listed criterion ids.
std::vector<CriterionResult> run_verification(const FaultInjection& fault = {},
                                              std::ostream* progress = nullptr,
                                              const std::vector<int>& only = {});

// True iff every gated criterion passed.
bool verification_passed(const std::vector<CriterionResult>& results);

std::string format_criterion(const CriterionResult& r);

}  // namespace subdiff
