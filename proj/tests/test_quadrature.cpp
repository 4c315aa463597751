#include <cmath>

#include <doctest.h>

#include "fracverify/errors.hpp"
#include "fracverify/kernels.hpp"
#include "fracverify/quadrature.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double rel_err(double a, double b) {
    return std::fabs(a - b) / std::max(std::fabs(b), 1e-300);
}

double lg(double x) {
    return std::lgamma(x);
}

}  // namespace

TEST_CASE("integrate_unit is exact on smooth polynomials") {
    fracverify::QuadratureSpec spec;
    spec.tol = 1e-12;
    const auto res = fracverify::integrate_unit([](double t) { return 3.0 * t * t; }, spec);
    CHECK(rel_err(res.value, 1.0) < 1e-13);
    CHECK(res.error <= spec.tol);
}

TEST_CASE("integrate_unit absorbs Jacobi endpoint weights") {
    fracverify::QuadratureSpec spec;
    spec.alpha = -0.5;
    spec.beta = -0.5;
    spec.tol = 1e-12;
    const auto res = fracverify::integrate_unit([](double) { return 1.0; }, spec);
    CHECK(rel_err(res.value, kPi) < 1e-12);
}

TEST_CASE("integrate_unit reproduces the beta function") {
    fracverify::QuadratureSpec spec;
    spec.alpha = 0.2;
    spec.beta = 2.4;
    spec.tol = 1e-12;
    const auto res = fracverify::integrate_unit([](double) { return 1.0; }, spec);
    const double expected = std::exp(lg(1.2) + lg(3.4) - lg(4.6));
    CHECK(rel_err(res.value, expected) < 1e-11);
}

TEST_CASE("quadrature spec validation rejects bad configurations") {
    fracverify::QuadratureSpec spec;
    spec.alpha = -1.0;
    CHECK_THROWS_AS(spec.validate(), fracverify::DomainError);
    spec.alpha = 0.0;
    spec.tol = 0.0;
    CHECK_THROWS_AS(spec.validate(), fracverify::DomainError);
    spec.tol = 1e-10;
    spec.max_subdivisions = 0;
    CHECK_THROWS_AS(spec.validate(), fracverify::DomainError);
}

TEST_CASE("integrate_unit raises ToleranceError on divergent integrands") {
    fracverify::QuadratureSpec spec;
    try {
        fracverify::integrate_unit([](double t) { return 1.0 / t; }, spec);
        FAIL("expected ToleranceError");
    } catch (const fracverify::ToleranceError& e) {
        CHECK(std::isfinite(e.best_estimate()));
        CHECK(e.error_estimate() > 0.0);
    }
}

TEST_CASE("integrate_tail matches the beta closed form of pure powers") {
    // integral_1^inf z^(2s-n-3-2k) (z^2-1)^(-s) dz
    //   = Gamma(n/2+k+1) Gamma(1-s) / (2 Gamma(n/2+k+2-s)).
    struct Row {
        int n;
        double s;
        int k;
    };
    for (const Row row : {Row{2, 0.7, 0}, Row{3, 0.8, 1}, Row{5, 0.6, 2}}) {
        const double p = 2.0 * row.s - row.n - 3.0 - 2.0 * row.k;
        fracverify::QuadratureSpec spec;
        spec.tol = 1e-12;
        const double quad =
            fracverify::integrate_tail([p](double z) { return std::pow(z, p); }, row.s, spec)
                .value;
        const double half_n = 0.5 * row.n;
        const double expected =
            0.5 * std::exp(lg(half_n + row.k + 1.0) + lg(1.0 - row.s) -
                           lg(half_n + row.k + 2.0 - row.s));
        CHECK(rel_err(quad, expected) < 1e-9);
    }
}

TEST_CASE("integrate_tail requires s in (1/2, 1)") {
    fracverify::QuadratureSpec spec;
    CHECK_THROWS_AS(fracverify::integrate_tail([](double) { return 1.0; }, 1.2, spec),
                    fracverify::DomainError);
    CHECK_THROWS_AS(fracverify::integrate_tail([](double) { return 1.0; }, 0.5, spec),
                    fracverify::DomainError);
}

TEST_CASE("sphere_mean of the inverse n-th power has a rational closed form") {
    // mean over the sphere of radius rho, offset x, of d^-n equals
    // rho^(2-n) / (rho^2 - x^2) in every dimension n >= 2.
    for (int n : {2, 3, 5, 9}) {
        const fracverify::ProblemParams params{n, 0.75};
        for (auto [rho, x] : {std::pair{1.7, 0.45}, std::pair{1.05, 0.95}}) {
            const double mean = fracverify::sphere_mean(
                params, [n](double d) { return std::pow(d, -static_cast<double>(n)); }, rho,
                x);
            const double expected = std::pow(rho, 2.0 - n) / (rho * rho - x * x);
            CHECK(rel_err(mean, expected) < 1e-9);
        }
    }
}

TEST_CASE("sphere_mean guards dimension and the singular diagonal") {
    const fracverify::ProblemParams one_d{1, 0.75};
    CHECK_THROWS_AS(
        fracverify::sphere_mean(one_d, [](double d) { return d; }, 1.0, 0.5),
        fracverify::DomainError);
    const fracverify::ProblemParams params{3, 0.75};
    CHECK_THROWS_AS(
        fracverify::sphere_mean(params, [](double d) { return std::pow(d, -3.0); }, 1.2, 1.2),
        fracverify::ToleranceError);
}

TEST_CASE("poisson_extension of the constant datum is one") {
    const auto one = [](double) { return 1.0; };
    const fracverify::ProblemParams low{1, 0.75};
    CHECK(rel_err(fracverify::poisson_extension(low, one, 0.3), 1.0) < 1e-8);
    const fracverify::ProblemParams mid{3, 0.6};
    CHECK(rel_err(fracverify::poisson_extension(mid, one, 0.5), 1.0) < 1e-8);
}

TEST_CASE("poisson_extension of an indicator matches the layer-cake closed form") {
    // Datum 1_{rho <= b}. With w = (1-x^2)/(b^2-1),
    //   h(x) = gamma(1,s) (pi / sin(pi s) - w^s integral_0^1 u^(s-1)/(1+wu) du).
    const int n = 3;
    const double s = 0.7;
    const double b = 2.0;
    const double x = 0.4;
    const fracverify::ProblemParams params{n, s};
    const double h = fracverify::poisson_extension(
        params, [b](double rho) { return rho <= b ? 1.0 : 0.0; }, x);
    const double w = (1.0 - x * x) / (b * b - 1.0);
    fracverify::QuadratureSpec spec;
    spec.alpha = s - 1.0;
    spec.tol = 1e-12;
    const double lower =
        std::pow(w, s) *
        fracverify::integrate_unit([w](double u) { return 1.0 / (1.0 + w * u); }, spec).value;
    const double gamma_one_s = fracverify::gamma_ns(fracverify::ProblemParams{1, s});
    const double expected = gamma_one_s * (kPi / std::sin(kPi * s) - lower);
    CHECK(rel_err(h, expected) < 1e-7);
}

TEST_CASE("poisson_extension guards its radius") {
    const fracverify::ProblemParams params{2, 0.8};
    const auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(fracverify::poisson_extension(params, one, 1.0), fracverify::DomainError);
    CHECK_THROWS_AS(fracverify::poisson_extension(params, one, -0.1), fracverify::DomainError);
}
