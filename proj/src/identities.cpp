#include "fracverify/identities.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fracverify/eigenbounds.hpp"
#include "fracverify/quadrature.hpp"
#include "fracverify/specfun.hpp"
#include "fracverify/verifier.hpp"

namespace fracverify {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kRootPi = 1.77245385090551602729816748334115;

// All identity checks route their explicit Gamma factors through this
// wrapper so a multiplicative perturbation can be injected. Checks whose
// two sides are homogeneous of the same degree in Gamma additionally
// compare against an unperturbed library value, so the suite always
// detects the injection.
class GammaFn {
  public:
    explicit GammaFn(double eps) : eps_(eps) {}
    double operator()(double x) const { return gamma(x) * (1.0 + eps_); }

  private:
    double eps_;
};

double rel_err(double a, double b) {
    const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return std::fabs(a - b) / scale;
}

class Suite {
  public:
    explicit Suite(double eps) : g_(eps) {}

    std::vector<IdentityResult> run() {
        gamma_reflection();
        gamma_duplication();
        beta_integral();
        hyp_polynomial_0();
        hyp_polynomial_1();
        hyp_euler_transform();
        hyp_degenerate_c_eq_a();
        hyp_degenerate_c_eq_a_minus_1();
        hyp_quadratic_transform();
        hyp_series_vs_integral();
        eigenvalue_bound_forms();
        eigenvalue_bound_one_d_chain();
        mu_forms_check();
        big_m_forms_check();
        log_case_constant_forms();
        return std::move(results_);
    }

  private:
    GammaFn g_;
    std::vector<IdentityResult> results_;

    struct Check {
        IdentityResult result;

        Check(std::string name, double tolerance) {
            result.name = std::move(name);
            result.tolerance = tolerance;
            result.max_rel_err = 0.0;
            result.points = 0;
            result.passed = true;
        }

        void offer(double lhs, double rhs) {
            ++result.points;
            result.max_rel_err = std::max(result.max_rel_err, rel_err(lhs, rhs));
        }

        IdentityResult finish() {
            result.passed = result.max_rel_err <= result.tolerance;
            return result;
        }
    };

    void gamma_reflection() {
        Check check("gamma-reflection", 1e-10);
        for (int k = 1; k <= 25; ++k) {
            const double z = k / 26.0;
            check.offer(g_(z) * g_(1.0 - z), kPi / std::sin(kPi * z));
        }
        results_.push_back(check.finish());
    }

    void gamma_duplication() {
        Check check("gamma-duplication", 1e-10);
        for (int k = 1; k <= 25; ++k) {
            const double z = 0.1 + 0.12 * k;
            check.offer(kRootPi * g_(2.0 * z),
                        std::pow(2.0, 2.0 * z - 1.0) * g_(z) * g_(z + 0.5));
        }
        results_.push_back(check.finish());
    }

    void beta_integral() {
        Check check("beta-integral", 1e-10);
        const double zs[5] = {0.3, 0.7, 1.2, 1.9, 2.6};
        const double ws[5] = {0.4, 0.9, 1.5, 2.3, 3.1};
        for (double z : zs) {
            for (double w : ws) {
                QuadratureSpec spec;
                spec.alpha = z - 1.0;
                spec.beta = w - 1.0;
                spec.tol = 1e-12;
                const double integral = integrate_unit([](double) { return 1.0; }, spec).value;
                const double closed = g_(z) * g_(w) / g_(z + w);
                check.offer(closed, integral);
                check.offer(closed, beta(z, w));
            }
        }
        results_.push_back(check.finish());
    }

    void hyp_polynomial_0() {
        Check check("hyp-polynomial-0", 1e-10);
        for (int k = 1; k <= 25; ++k) {
            const double b = 0.2 + 0.17 * k;
            const double c = 0.5 + 0.23 * k;
            const double z = 0.037 * k;
            check.offer(hyp2f1(0.0, b, c, z), 1.0);
        }
        results_.push_back(check.finish());
    }

    void hyp_polynomial_1() {
        Check check("hyp-polynomial-1", 1e-10);
        for (int k = 1; k <= 25; ++k) {
            const double b = 0.3 + 0.15 * k;
            const double c = 0.8 + 0.21 * k;
            const double z = 0.9 - 0.034 * k;
            check.offer(hyp2f1(-1.0, b, c, z), 1.0 - b * z / c);
        }
        results_.push_back(check.finish());
    }

    void hyp_euler_transform() {
        Check check("hyp-euler-transform", 1e-10);
        for (int k = 1; k <= 25; ++k) {
            const double a = 0.2 + 0.045 * k;
            const double b = 0.3 + 0.062 * k;
            const double c = std::max(a, b) + 0.6 + 0.02 * k;
            const double z = 0.03 + 0.026 * k;
            check.offer(hyp2f1(a, b, c, z),
                        std::pow(1.0 - z, c - a - b) * hyp2f1(c - a, c - b, c, z));
        }
        results_.push_back(check.finish());
    }

    void hyp_degenerate_c_eq_a() {
        Check check("hyp-degenerate-c-eq-a", 1e-10);
        for (int k = 1; k <= 25; ++k) {
            const double b = 0.1 + 0.07 * k;
            const double a = b + 0.4 + 0.05 * k;
            const double z = 0.02 + 0.03 * k;
            check.offer(hyp2f1(a, b, a, z), std::pow(1.0 - z, -b));
        }
        results_.push_back(check.finish());
    }

    void hyp_degenerate_c_eq_a_minus_1() {
        Check check("hyp-degenerate-c-eq-a-minus-1", 1e-10);
        for (int k = 1; k <= 25; ++k) {
            const double b = 0.15 + 0.06 * k;
            const double a = b + 1.3 + 0.04 * k;
            const double z = 0.02 + 0.028 * k;
            check.offer(hyp2f1(a, b, a - 1.0, z),
                        std::pow(1.0 - z, -b - 1.0) * (1.0 - (a - b - 1.0) / (a - 1.0) * z));
        }
        results_.push_back(check.finish());
    }

    void hyp_quadratic_transform() {
        Check check("hyp-quadratic-transform", 1e-10);
        for (int k = 1; k <= 25; ++k) {
            const double a = 0.25 + 0.09 * k;
            const double b = 0.4 + 0.08 * k;
            const double z = 0.02 + 0.034 * k;
            const double root = std::sqrt(1.0 - z);
            const double w = (1.0 - root) / (1.0 + root);
            check.offer(hyp2f1(a, b, 2.0 * b, z),
                        std::pow(2.0, 2.0 * a) * std::pow(1.0 + root, -2.0 * a) *
                            hyp2f1(a, a - b + 0.5, b + 0.5, w * w));
        }
        results_.push_back(check.finish());
    }

    void hyp_series_vs_integral() {
        Check check("hyp-series-vs-integral", 1e-9);
        std::mt19937 rng(20240814u);
        std::uniform_real_distribution<double> ua(0.1, 2.2);
        std::uniform_real_distribution<double> ub(0.2, 2.5);
        std::uniform_real_distribution<double> ugap(0.3, 2.0);
        std::uniform_real_distribution<double> uz(0.05, 0.85);
        for (int k = 0; k < 50; ++k) {
            const double a = ua(rng);
            const double b = ub(rng);
            const double c = b + ugap(rng);
            const double z = uz(rng);
            QuadratureSpec spec;
            spec.alpha = b - 1.0;
            spec.beta = c - b - 1.0;
            spec.tol = 1e-12;
            const double integral =
                integrate_unit([a, z](double t) { return std::pow(1.0 - z * t, -a); }, spec)
                    .value;
            const double prefactor =
                std::exp(std::lgamma(c) - std::lgamma(b) - std::lgamma(c - b));
            check.offer(hyp2f1(a, b, c, z), prefactor * integral);
        }
        results_.push_back(check.finish());
    }

    void eigenvalue_bound_forms() {
        Check check("eigenvalue-bound-forms", 1e-12);
        const double svals[5] = {0.55, 0.65, 0.75, 0.85, 0.95};
        for (int n = 1; n <= 12; ++n) {
            const double n2 = 0.5 * n;
            for (double s : svals) {
                const double torsion =
                    g_(n2) * std::pow(4.0, -s) / (g_(1.0 + s) * g_(s + n2));
                const double via_torsion = g_(1.0 + s) * g_(1.0 + 2.0 * s + n2) /
                                           (torsion * g_(1.0 + 2.0 * s) * g_(1.0 + s + n2));
                const double explicit_form = std::pow(4.0, s) * g_(1.0 + s) * g_(1.0 + s) *
                                             g_(1.0 + 2.0 * s + n2) /
                                             ((s + n2) * g_(n2) * g_(1.0 + 2.0 * s));
                const double library = lambda_upper(ProblemParams{n, s}).lambda_upper;
                check.offer(via_torsion, explicit_form);
                check.offer(explicit_form, library);
            }
        }
        results_.push_back(check.finish());
    }

    void eigenvalue_bound_one_d_chain() {
        Check check("eigenvalue-bound-one-d-chain", 1e-12);
        for (int k = 1; k <= 25; ++k) {
            const double s = 0.5 + 0.019 * k;
            const double f1 = std::pow(4.0, s) * g_(1.0 + s) * g_(1.0 + s) *
                              g_(1.5 + 2.0 * s) /
                              ((0.5 + s) * g_(0.5) * g_(1.0 + 2.0 * s));
            const double f2 = s * std::pow(4.0, s) * g_(s) * g_(s) * g_(1.5 + 2.0 * s) /
                              (kRootPi * (1.0 + 2.0 * s) * g_(2.0 * s));
            const double f3 =
                2.0 * s * g_(s) * g_(1.5 + 2.0 * s) / ((1.0 + 2.0 * s) * g_(0.5 + s));
            const double f4 = g_(1.0 + s) * g_(1.5 + 2.0 * s) / g_(1.5 + s);
            const double library = lambda_upper(ProblemParams{1, s}).lambda_upper;
            check.offer(f1, f2);
            check.offer(f2, f3);
            check.offer(f3, f4);
            check.offer(f4, library);
        }
        results_.push_back(check.finish());
    }

    void mu_forms_check() {
        Check check("mu-forms", 1e-12);
        for (int k = 1; k <= 25; ++k) {
            const double s = 0.505 + 0.019 * k;
            const double lambda = g_(1.0 + s) * g_(1.5 + 2.0 * s) / g_(1.5 + s);
            const double chain_form =
                1.0 /
                (std::pow(2.0, 2.0 * s - 1.0) * lambda * g_(s) * std::fabs(g_(s - 1.0))) *
                std::pow(2.0, 4.0 * s - 2.0) * kRootPi * g_(2.0 * s - 1.0) /
                g_(2.5 - 2.0 * s);
            const double display_form = std::pow(2.0, 2.0 * s - 1.0) * (1.0 - s) * kRootPi /
                                        s * g_(1.5 + s) * g_(2.0 * s - 1.0) /
                                        (g_(s) * g_(s) * g_(s) * g_(1.5 + 2.0 * s) *
                                         g_(2.5 - 2.0 * s));
            check.offer(chain_form, display_form);
            check.offer(display_form, mu(s));
        }
        results_.push_back(check.finish());
    }

    void big_m_forms_check() {
        Check check("big-m-forms", 1e-12);
        const int dims[8] = {2, 3, 4, 6, 8, 10, 12, 127};
        const double svals[3] = {0.55, 0.7, 0.85};
        for (int n : dims) {
            const double n2 = 0.5 * n;
            for (double s : svals) {
                const ProblemParams params{n, s};
                const auto forms = big_m_forms(params);
                check.offer(forms[0], forms[1]);
                check.offer(forms[1], forms[2]);
                const double direct = (1.0 - s) * g_(1.0 + 2.0 * s) * g_(2.0 * s - 1.0) /
                                      (s * s * std::pow(g_(s), 4.0) * g_(1.0 - s)) *
                                      ((n + 2.0 * s) * g_(n2) * g_(n2 + 1.0 - s) /
                                       (g_(n2 + 1.0 + 2.0 * s) * g_(n2 + 1.0 - 2.0 * s)));
                check.offer(direct, big_m(params));
            }
        }
        results_.push_back(check.finish());
    }

    void log_case_constant_forms() {
        Check check("log-case-constant-forms", 1e-12);
        const double display = 5.0 * g_(0.25) * g_(0.25) / (48.0 * g_(0.75) * g_(0.75));
        const double via_reflection =
            5.0 * std::pow(g_(0.25), 4.0) * std::pow(std::sin(0.25 * kPi), 2.0) /
            (48.0 * kPi * kPi);
        check.offer(display, via_reflection);
        check.offer(display, log_case_constant());
        results_.push_back(check.finish());
    }
};

}  // namespace

std::vector<IdentityResult> run_identity_suite(double gamma_perturbation) {
    return Suite(gamma_perturbation).run();
}

}  // namespace fracverify
