#ifndef FRACVERIFY_SPECFUN_HPP
#define FRACVERIFY_SPECFUN_HPP

#include "fracverify/errors.hpp"

namespace fracverify {

// Gamma function on the real line, excluding the poles {0, -1, -2, ...}.
// Negative non-integer arguments are reached through the recursion
// Gamma(z+1) = z Gamma(z) applied to a positive-argument evaluation.
double gamma(double x);

// log|Gamma(x)| for x > 0, Lanczos approximation (g = 7, 9 coefficients).
double log_gamma(double x);

// Euler beta function B(z, w) = Gamma(z)Gamma(w)/Gamma(z+w) for z, w > 0,
// evaluated in log space.
double beta(double z, double w);

// Parameter block for the Gauss hypergeometric function 2F1(a, b; c | z).
struct HypParams {
    double a;
    double b;
    double c;
    double z;

    // Throws PoleError if c is a non-positive integer, DomainError if z
    // lies outside [0, 1) and the series does not terminate.
    void validate() const;

    // True when a (or b) is a non-positive integer, so the series is a
    // polynomial of degree -a (or -b).
    bool terminates() const;
};

// Gauss hypergeometric function by direct series summation with Pochhammer
// recurrences. Applies the Euler transform
//   2F1(a,b;c|z) = (1-z)^(c-a-b) 2F1(c-a, c-b; c | z)
// when z > 0.75 and c - a - b < 0.25 (and the series does not terminate),
// which extracts the z -> 1 singularity before summing. Stops when three
// consecutive terms are below 1e-16 times the accumulated sum; throws
// ConvergenceError beyond 100000 terms.
double hyp2f1(const HypParams& p);
double hyp2f1(double a, double b, double c, double z);

}  // namespace fracverify

#endif
