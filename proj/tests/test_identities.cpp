#include <algorithm>
#include <string>
#include <vector>

#include <doctest.h>

#include "fracverify/identities.hpp"

namespace {

const fracverify::IdentityResult* find(const std::vector<fracverify::IdentityResult>& results,
                                       const std::string& name) {
    for (const auto& r : results) {
        if (r.name == name) {
            return &r;
        }
    }
    return nullptr;
}

}  // namespace

TEST_CASE("identity suite passes unperturbed") {
    const auto results = fracverify::run_identity_suite();
    CHECK(results.size() >= 15);
    for (const auto& r : results) {
        INFO(r.name, " max_rel_err=", r.max_rel_err);
        CHECK(r.passed);
        CHECK(r.points >= 2);
        CHECK(r.max_rel_err >= 0.0);
        CHECK(r.max_rel_err <= r.tolerance);
    }
    for (const char* name :
         {"gamma-reflection", "gamma-duplication", "beta-integral", "hyp-polynomial-0",
          "hyp-polynomial-1", "hyp-euler-transform", "hyp-degenerate-c-eq-a",
          "hyp-degenerate-c-eq-a-minus-1", "hyp-quadratic-transform",
          "hyp-series-vs-integral", "eigenvalue-bound-forms", "eigenvalue-bound-one-d-chain",
          "mu-forms", "big-m-forms", "log-case-constant-forms"}) {
        const auto* r = find(results, name);
        REQUIRE_MESSAGE(r != nullptr, name);
        CHECK(r->passed);
    }
    const auto* series = find(results, "hyp-series-vs-integral");
    CHECK(series->points == 50);
}

TEST_CASE("gamma perturbation breaks the suite") {
    const auto results = fracverify::run_identity_suite(1e-6);
    const bool any_failed =
        std::any_of(results.begin(), results.end(),
                    [](const fracverify::IdentityResult& r) { return !r.passed; });
    CHECK(any_failed);
    const auto* reflection = find(results, "gamma-reflection");
    REQUIRE(reflection != nullptr);
    CHECK_FALSE(reflection->passed);
}
