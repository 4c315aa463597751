#ifndef FRACVERIFY_EIGENBOUNDS_HPP
#define FRACVERIFY_EIGENBOUNDS_HPP

#include <array>

#include "fracverify/kernels.hpp"

namespace fracverify {

// Upper bound for the first Dirichlet eigenvalue of the fractional
// Laplacian on the unit ball.
struct EigenBound {
    int n;
    double s;
    double lambda_upper;
};

// Normalization of the torsion function kappa_{n,s} (1 - |x|^2)^s:
//   kappa_{n,s} = Gamma(n/2) 4^(-s) / (Gamma(1+s) Gamma(s + n/2)).
double torsion_constant(const ProblemParams& params);

// Rayleigh-quotient bound evaluated with the torsion function as trial
// function, computed in log space:
//   Lambda(n, s) = 4^s Gamma(1+s)^2 Gamma(1 + 2s + n/2)
//                  / ((s + n/2) Gamma(n/2) Gamma(1 + 2s)).
EigenBound lambda_upper(const ProblemParams& params);

// The same bound through the torsion-constant route,
//   Lambda = (1/kappa_{n,s}) Gamma(1+s) Gamma(1 + 2s + n/2)
//            / (Gamma(1+2s) Gamma(1 + s + n/2)),
// used by the identity suite to cross-check lambda_upper.
double lambda_upper_torsion_form(const ProblemParams& params);

// For n = 1 the bound collapses through the duplication formula; the four
// algebraically equal stages of that chain, used as an identity check:
//   4^s Gamma(1+s)^2 Gamma(3/2+2s) / ((1/2+s) Gamma(1/2) Gamma(1+2s)),
//   s 4^s Gamma(s)^2 Gamma(3/2+2s) / (sqrt(pi) (1+2s) Gamma(2s)),
//   2 s Gamma(s) Gamma(3/2+2s) / ((1+2s) Gamma(1/2+s)),
//   Gamma(1+s) Gamma(3/2+2s) / Gamma(3/2+s).
std::array<double, 4> lambda_upper_one_d_chain(double s);

}  // namespace fracverify

#endif
