#ifndef FRACVERIFY_VERIFIER_HPP
#define FRACVERIFY_VERIFIER_HPP

#include <array>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fracverify/kernels.hpp"
#include "fracverify/quadrature.hpp"

namespace fracverify {

// Rectangular scan lattice. A scan over (lo, hi) with step h evaluates the
// inclusive hull [lo + h, hi - h]; refinement halves the step on the same
// hull, inserting midpoints, so coarse and refined minima are comparable.
// Exclusions are (center, halfwidth) intervals removed from the s-axis.
struct GridSpec {
    double s_min = 0.5;
    double s_max = 1.0;
    double x_min = 0.5;
    double x_max = 1.0;
    double s_step = 1e-3;
    double x_step = 1e-3;
    std::vector<std::pair<double, double>> exclusions;

    void validate() const;
    std::vector<double> s_points() const;
    std::vector<double> x_points() const;

    // Same hull, both steps halved.
    GridSpec refined() const;
};

enum class CaseId {
    LogCase,   // n = 1, s = 3/4 closed-form certificate + scan
    OneD,      // n = 1 subinterval certificate q_ab
    HighD_C,   // n >= 2 reduced condition with the sandwich bound
    HighD_D,   // n >= 4 relaxed condition with the series bound
};

std::string to_string(CaseId id);

// Result of one positivity scan. argmin_s/argmin_x locate the grid minimum
// (for the log case the x slot carries the scan variable t and argmin_s is
// fixed at 3/4). passed requires both the coarse and the refined minimum to
// be positive. clamped_points counts evaluations where the interior-minimum
// formula left the subinterval and was clamped back; notes carries
// human-readable detail such as the refined minimum.
struct ScanReport {
    CaseId case_id = CaseId::OneD;
    int n = 1;
    double s = 0.0;                 // fixed s when the scan is 1-dimensional
    double a = 0.0;                 // subinterval for the one-d case
    double b = 0.0;
    GridSpec grid;
    double min_value = std::numeric_limits<double>::quiet_NaN();
    double argmin_s = std::numeric_limits<double>::quiet_NaN();
    double argmin_x = std::numeric_limits<double>::quiet_NaN();
    bool passed = false;
    long points_evaluated = 0;
    double refinement_delta = std::numeric_limits<double>::quiet_NaN();
    long clamped_points = 0;
    double oracle_normalization = std::numeric_limits<double>::quiet_NaN();
    std::string notes;
};

// The partition (3/5, 7/10] u (7/10, 4/5] u (4/5, 9/10] u (9/10, 1) used
// by the one-dimensional certificate.
struct SubintervalFamily {
    static constexpr std::array<double, 5> breakpoints{0.6, 0.7, 0.8, 0.9, 1.0};
    static constexpr int count = 4;
    static std::pair<double, double> interval(int i);
};

// Mid-concavity threshold: the spherical mean centered at the origin
// dominates the one centered at e1 for all x <= x_*(n, s), where
//   x_*(n, s) = 2/3                                      (n = 1, s = 3/4)
//   x_*(n, s) = 1 / (1 + (2 - 2^(4s-2-n))^(1/(4s-2-n)))  (otherwise).
// Always in (1/2, 1); for n = 1 it is >= 3/5 and increasing in s.
double x_star(const ProblemParams& params);

// Certificate constant of the one-dimensional case,
//   mu = 2^(2s-1) (1-s) sqrt(pi) / s * Gamma(3/2+s) Gamma(2s-1)
//        / (Gamma(s)^3 Gamma(3/2+2s) Gamma(5/2-2s)),
// displayed-form route; mu_forms returns both algebraic forms.
double mu(double s);
std::array<double, 2> mu_forms(double s);

// One-dimensional certificate integrand on the subinterval (a, b):
//   q_ab(s, x) = (2 b^(4s-3) - (1+b)^(4s-3)) / (3-4s)
//                - (1-x)^(4s-3) / (3-4s)
//                + (1+b)^(s-2) (2a-1) mu(s) (1-x)^(s-2).
// s = 3/4 is the removable-singularity point of the display and is
// rejected with DomainError.
double q_ab(double s, double x, double a, double b);

// Interior stationary point of x -> q_ab(s, x),
//   x_ab(s) = 1 - ((1+b)^(s-2) (2a-1) (2-s) mu(s))^(1/(3s-1)),
// not yet clamped into (a, b).
double x_ab(double s, double a, double b);

// Full one-dimensional reduced expression (before the q_ab lower bound):
//   (2 x^(4s-3) - (1-x)^(4s-3) - (1+x)^(4s-3)) / (3-4s)
//   + mu(s) (1-x^2)^(s-2) (2x-1).
double one_d_expression(double s, double x);

// Closed-form pieces of the logarithmic-case certificate (n=1, s=3/4):
// the constant c = 5 Gamma(1/4)^2 / (48 Gamma(3/4)^2), the stationary
// point c/(c+1) of t -> -ln(1-t) + ln t + c/t - 3c/2 on (0, 5/9), and the
// closed-form minimum ln c + 1 - c/2.
double log_case_constant();
double log_case_stationary_point();
double log_case_closed_form_min();
double log_case_expression(double t);

// Scan of the log-case expression over t in (0, 5/9) with the given number
// of points, cross-checked against the closed form. passed requires both
// the closed-form minimum and the scanned minimum to be positive.
ScanReport log_case_certificate(long points = 200000);

// Sandwich constant of the high-dimensional reduction,
//   M(n, s) = 2 pi^(n/2) gamma(n,s) kappa(n, s-1)
//             / (Gamma(n/2) Lambda(n,s) kappa(n, 2s-1)),
// big_m_forms returns the three algebraic forms. Requires n >= 2.
double big_m(const ProblemParams& params);
std::array<double, 3> big_m_forms(const ProblemParams& params);

// Reduced high-dimensional conditions:
//   lhs_qc = x^(4s-2-n) - 2F1(n/2+1-2s, 2-2s; n/2 | x^2)
//            + M(n,s) Gamma(n/2+1) Gamma(1-s) / (2 Gamma(n/2+2-s))
//              * (1-x^2)^(s-2)                        (n >= 2)
//   lhs_qd = x^(4s-2-n) - (1-x^2)^(2s-2) + same M-term (n >= 4).
double lhs_qc(const ProblemParams& params, double x);
double lhs_qd(const ProblemParams& params, double x);

// Four subinterval scans of q_ab(s, clamp(x_ab(s), a, b)) over the grid's
// s-points (x_min/x_max are taken from each subinterval; the s=3/4
// puncture is always excluded in addition to grid exclusions). Each report
// carries the nested-refinement delta.
std::vector<ScanReport> verify_one_d(const GridSpec& grid);

// Two-dimensional (s, x) positivity scans of lhs_qc or lhs_qd for each
// requested dimension, with nested-refinement deltas.
std::vector<ScanReport> verify_high_d(const std::vector<int>& dims, const GridSpec& grid,
                                      CaseId variant = CaseId::HighD_C);

// Minimum over the grid's x-points of the selected reduced condition for
// each of the grid's s-points, in s order (compact curve output).
std::vector<double> high_d_min_curve(int n, const GridSpec& grid,
                                     CaseId variant = CaseId::HighD_C);

// Direct quadrature of the unreduced positivity condition at one point,
// normalized to the same scale as the scan conditions: for n >= 2 the
// angular integrals are evaluated by Gauss-Jacobi quadrature instead of
// the hypergeometric closed forms; for n = 1 the two-point means are used
// with the exact constant chain. Requires x_star(n,s) < x < 1.
double direct_qbis_oracle(const ProblemParams& params, double x,
                          const QuadratureSpec& spec = {.tol = 1e-9});

// Normalization constant mapping the raw kernel-scale positivity condition
// onto the scale of the reduced scan conditions (recorded in reports).
double qbis_oracle_normalization(const ProblemParams& params);

}  // namespace fracverify

#endif
