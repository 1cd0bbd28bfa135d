// Acceptance battery: runs every verification criterion at desk scale and
// fails the build if a gated one regresses. The battery itself prints one
// status line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <iostream>

#include "doctest.h"
#include "subdiff/verify.hpp"

using namespace subdiff;

TEST_CASE("verification battery: every gated criterion passes") {
    const auto results = run_verification({}, &std::cout);
    REQUIRE(results.size() == 10);
    for (const auto& r : results) {
        INFO("criterion " << r.id << " (" << r.name << "): " << r.detail);
        CHECK(r.id >= 1);
        CHECK_FALSE(r.name.empty());
        if (r.gated) CHECK(r.pass);
    }
    CHECK(verification_passed(results) ==
          std::all_of(results.begin(), results.end(),
                      [](const CriterionResult& r) { return r.pass || !r.gated; }));
}

TEST_CASE("mutation probe: a corrupted weight table is caught") {
    FaultInjection fault;
    fault.flip_gl_weight_sign = true;
    const auto results = run_verification(fault, nullptr, {1});
    REQUIRE(results.size() == 1);
    CHECK(results[0].id == 1);
    CHECK_FALSE(results[0].pass);
    CHECK_FALSE(verification_passed(results));
}
