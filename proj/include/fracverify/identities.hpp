#ifndef FRACVERIFY_IDENTITIES_HPP
#define FRACVERIFY_IDENTITIES_HPP

#include <string>
#include <vector>

namespace fracverify {

// One multi-form consistency check: the largest relative discrepancy seen
// across the sample grid, the tolerance it was held to, and the verdict.
struct IdentityResult {
    std::string name;
    double max_rel_err;
    double tolerance;
    long points;
    bool passed;
};

// Runs every cross-form identity the library relies on: gamma reflection
// and duplication, the beta integral against its gamma closed form,
// hypergeometric identities (binomial collapse, Euler transform, the
// contiguous second identity, the quadratic transform), the eigenvalue
// bound in its two forms plus the n=1 four-stage chain, the certificate
// constant mu in both forms, and the sandwich constant M in all three
// forms. gamma_perturbation multiplies every closed-form gamma evaluation
// by (1 + eps); any nonzero eps around 1e-6 must break the suite, which is
// the self-test hook of the identities command.
std::vector<IdentityResult> run_identity_suite(double gamma_perturbation = 0.0);

}  // namespace fracverify

#endif
