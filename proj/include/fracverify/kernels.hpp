#ifndef FRACVERIFY_KERNELS_HPP
#define FRACVERIFY_KERNELS_HPP

#include <span>

#include "fracverify/errors.hpp"

namespace fracverify {

// Dimension and fractional order of the eigenvalue problem.
struct ProblemParams {
    int n;
    double s;

    // Throws DomainError unless n >= 1 and 1/2 < s < 1.
    void validate() const;
};

// Order parameter tau of the Riesz-type kernel F_tau, together with the
// branch flag: the power law |z|^(2 tau - n) applies except when
// tau - n/2 is a non-negative integer, where a logarithmic factor enters.
struct KernelOrder {
    double tau;
    bool log_branch;

    static KernelOrder make(int n, double tau);
};

// Normalization constant kappa(n, tau) = Gamma(n/2 - tau) /
// (4^tau pi^(n/2) |Gamma(tau)|) of the power branch.
// Throws BranchError when tau - n/2 is a non-negative integer (log branch)
// and PoleError when tau is a non-positive integer.
double kappa(int n, double tau);

// Radial profile of the kernel F_tau at distance r > 0:
//   power branch:  kappa(n, tau) r^(2 tau - n)
//   log branch:    (-1)^(1 + tau - n/2) 2^(1 - 2 tau) pi^(-n/2)
//                  / (Gamma(1 + tau - n/2) Gamma(tau)) * r^(2 tau - n) ln r.
double fundamental(const ProblemParams& params, const KernelOrder& order, double r);

// Spherical mean J_tau(x; y) of F_tau(. - y e1) over the sphere of radius x:
//   n >= 2:  F_tau(max(x,y)) * 2F1(n/2 - tau, 1 - tau; n/2 | (min/max)^2)
//   n  = 1:  (F_tau(x - y) + F_tau(x + y)) / 2.
// The diagonal x = y is finite only for tau > 1/2 (evaluated by Gauss
// summation); otherwise it throws CoincidenceError. x = 0 or y = 0
// degenerate continuously to F_tau(max(x,y)).
double j_tau(const ProblemParams& params, const KernelOrder& order, double x, double y);

// Poisson kernel normalization gamma(n, s) = Gamma(n/2) /
// (pi^(n/2) Gamma(s) Gamma(1-s)).
double gamma_ns(const ProblemParams& params);

// Poisson kernel of the unit ball,
//   P_s(x, y) = gamma(n,s) (1 - |x|^2)^s / (|x - y|^n (|y|^2 - 1)^s),
// for |x| < 1 < |y|. Points are n-vectors; spans must have size n.
double poisson_kernel(const ProblemParams& params,
                      std::span<const double> x,
                      std::span<const double> y);

}  // namespace fracverify

#endif
