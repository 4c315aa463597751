#ifndef FRACVERIFY_QUADRATURE_HPP
#define FRACVERIFY_QUADRATURE_HPP

#include <functional>

#include "fracverify/errors.hpp"
#include "fracverify/kernels.hpp"

namespace fracverify {

// Endpoint singularity exponents and accuracy budget for the adaptive
// Gauss-Jacobi integrator on (0, 1): the weight is t^alpha (1-t)^beta,
// both exponents > -1. tol is an absolute error target.
struct QuadratureSpec {
    double alpha = 0.0;
    double beta = 0.0;
    double tol = 1e-10;
    int max_subdivisions = 60;

    // Throws DomainError on exponents <= -1, non-positive tol, or a
    // non-positive subdivision budget.
    void validate() const;
};

struct QuadResult {
    double value;
    double error;
};

// Integral of f(t) t^alpha (1-t)^beta over (0, 1), adaptive bisection with
// Gauss-Jacobi panels absorbing whichever endpoint weight the panel
// touches. Throws ToleranceError (carrying the best estimate) if the
// subdivision budget is exhausted before the error target is met.
QuadResult integrate_unit(const std::function<double(double)>& f, const QuadratureSpec& spec);

// Integral of f(z) (z^2 - 1)^(-s) over (1, infinity), via z = 1/t:
//   integral_0^1 f(1/t) (1+t)^(-s) t^(2s-2) (1-t)^(-s) dt,
// i.e. integrate_unit with alpha = 2s - 2, beta = -s (overriding whatever
// exponents the caller put in spec; tol and the budget are honored).
QuadResult integrate_tail(const std::function<double(double)>& f, double s,
                          const QuadratureSpec& spec);

// Average of g(|theta - y e1|) over theta on the sphere of radius r in
// dimension n >= 2. Reduces to a Jacobi-weighted integral in the polar
// angle (weight (1 - t^2)^((n-3)/2)) and normalizes by the quadrature of
// the weight itself. For kernels divergent on the diagonal, r = y
// propagates as ToleranceError; n = 1 throws DomainError (the two-point
// mean needs no quadrature).
double sphere_mean(const ProblemParams& params, const std::function<double(double)>& g,
                   double r, double y, const QuadratureSpec& spec = {});

// s-harmonic extension of the radial exterior datum g at radius x in (0,1):
//   h(x) = integral over |y| > 1 of P_s(x e1, y) g(|y|) dy,
// composed from the Poisson kernel constant, the spherical mean over each
// exterior sphere, and the tail integral in the radius.
double poisson_extension(const ProblemParams& params, const std::function<double(double)>& g,
                         double x, const QuadratureSpec& spec = {});

}  // namespace fracverify

#endif
