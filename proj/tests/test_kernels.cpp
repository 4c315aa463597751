#include <array>
#include <cmath>
#include <utility>

#include <doctest.h>

#include "fracverify/errors.hpp"
#include "fracverify/kernels.hpp"
#include "fracverify/quadrature.hpp"
#include "fracverify/specfun.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double rel_err(double a, double b) {
    return std::fabs(a - b) / std::max(std::fabs(b), 1e-300);
}

}  // namespace

TEST_CASE("problem parameter validation") {
    CHECK_THROWS_AS((fracverify::ProblemParams{0, 0.75}.validate()), fracverify::DomainError);
    CHECK_THROWS_AS((fracverify::ProblemParams{2, 0.5}.validate()), fracverify::DomainError);
    CHECK_THROWS_AS((fracverify::ProblemParams{2, 1.0}.validate()), fracverify::DomainError);
    CHECK_NOTHROW((fracverify::ProblemParams{11, 0.99}.validate()));
}

TEST_CASE("kappa frozen value and sign pattern") {
    CHECK(rel_err(fracverify::kappa(1, 0.25), 1.0 / std::sqrt(2.0 * kPi)) < 1e-13);
    CHECK(fracverify::kappa(1, 2.0 * 0.6 - 1.0) > 0.0);
    CHECK(fracverify::kappa(1, 2.0 * 0.8 - 1.0) < 0.0);
}

TEST_CASE("kappa branch and pole guards") {
    CHECK_THROWS_AS(fracverify::kappa(2, 1.0), fracverify::BranchError);
    CHECK_THROWS_AS(fracverify::kappa(3, 2.5), fracverify::BranchError);
    CHECK_THROWS_AS(fracverify::kappa(3, 0.0), fracverify::PoleError);
    CHECK_THROWS_AS(fracverify::kappa(3, -1.0), fracverify::PoleError);
}

TEST_CASE("fundamental power branch scales as r^(2 tau - n)") {
    const fracverify::ProblemParams params{3, 0.75};
    const auto order = fracverify::KernelOrder::make(3, 0.6);
    const double r = 0.37;
    const double ratio = fracverify::fundamental(params, order, 2.0 * r) /
                         fracverify::fundamental(params, order, r);
    CHECK(rel_err(ratio, std::pow(2.0, 2.0 * 0.6 - 3.0)) < 1e-12);
    CHECK_THROWS_AS(fracverify::fundamental(params, order, 0.0), fracverify::DomainError);
}

TEST_CASE("fundamental logarithmic branch closed forms") {
    const fracverify::ProblemParams one_d{1, 0.75};
    const auto half = fracverify::KernelOrder::make(1, 0.5);
    CHECK(half.log_branch);
    for (double r : {0.3, 2.5}) {
        CHECK(rel_err(fracverify::fundamental(one_d, half, r), -std::log(r) / kPi) < 1e-13);
    }
    const fracverify::ProblemParams three_d{3, 0.8};
    const auto order = fracverify::KernelOrder::make(3, 1.5);
    CHECK(order.log_branch);
    for (double r : {0.4, 3.0}) {
        CHECK(rel_err(fracverify::fundamental(three_d, order, r),
                      -std::log(r) / (2.0 * kPi * kPi)) < 1e-13);
    }
    CHECK_THROWS_AS(
        fracverify::fundamental(three_d, fracverify::KernelOrder{1.5, false}, 2.0),
        fracverify::BranchError);
}

TEST_CASE("j_tau pairs the logarithmic kernel into ln|x^2 - y^2|") {
    const fracverify::ProblemParams params{1, 0.75};
    const auto order = fracverify::KernelOrder::make(1, 0.5);
    const double value = fracverify::j_tau(params, order, 0.3, 0.8);
    CHECK(rel_err(value, -std::log(0.8 * 0.8 - 0.3 * 0.3) / (2.0 * kPi)) < 1e-13);
}

TEST_CASE("j_tau agrees with direct spherical quadrature off the diagonal") {
    struct Row {
        int n;
        double s;
        double tau;
        double x;
        double y;
    };
    for (const Row row : {Row{3, 0.6, 0.2, 0.4, 0.9}, Row{2, 0.65, 0.3, 0.35, 1.4}}) {
        const fracverify::ProblemParams params{row.n, row.s};
        const auto order = fracverify::KernelOrder::make(row.n, row.tau);
        const double closed = fracverify::j_tau(params, order, row.x, row.y);
        const double quad = fracverify::sphere_mean(
            params,
            [&](double d) { return fracverify::fundamental(params, order, d); }, row.x,
            row.y);
        CHECK(rel_err(closed, quad) < 1e-9);
        CHECK(rel_err(closed, fracverify::j_tau(params, order, row.y, row.x)) < 1e-14);
    }
}

TEST_CASE("j_tau diagonal matches a Jacobi-weighted quadrature route") {
    // On the diagonal the polar-angle integral carries the weight
    // (1-t^2)^((n-3)/2) (1-t)^(tau-n/2) once d^2 = 2x^2(1-t) is substituted,
    // so mapping t = 2u - 1 gives exponents alpha = (n-3)/2, beta = tau - 3/2.
    const int n = 3;
    const double tau = 0.8;
    const double x = 0.5;
    const fracverify::ProblemParams params{n, 0.9};
    const auto order = fracverify::KernelOrder::make(n, tau);
    const double closed = fracverify::j_tau(params, order, x, x);

    fracverify::QuadratureSpec spec;
    spec.alpha = 0.5 * (n - 3);
    spec.beta = tau - 1.5;
    spec.tol = 1e-12;
    const double integral =
        fracverify::integrate_unit([](double) { return 1.0; }, spec).value;
    const double numerator = fracverify::kappa(n, tau) *
                             std::pow(2.0 * x * x, tau - 0.5 * n) *
                             std::pow(2.0, tau - 0.5 + 0.5 * (n - 3)) * integral;
    const double weight_mass =
        std::sqrt(kPi) * fracverify::gamma(0.5 * (n - 1)) / fracverify::gamma(0.5 * n);
    CHECK(rel_err(closed, numerator / weight_mass) < 1e-9);
}

TEST_CASE("j_tau diagonal in one dimension degenerates to half the far kernel") {
    const fracverify::ProblemParams params{1, 0.8};
    const auto order = fracverify::KernelOrder::make(1, 0.6);
    const double x = 0.5;
    CHECK(rel_err(fracverify::j_tau(params, order, x, x),
                  0.5 * fracverify::fundamental(params, order, 2.0 * x)) < 1e-12);
}

TEST_CASE("j_tau guards the divergent diagonal") {
    const fracverify::ProblemParams params{2, 0.6};
    CHECK_THROWS_AS(
        fracverify::j_tau(params, fracverify::KernelOrder::make(2, 0.2), 0.7, 0.7),
        fracverify::CoincidenceError);
    CHECK_THROWS_AS(
        fracverify::j_tau(params, fracverify::KernelOrder::make(2, 0.8), 0.0, 0.0),
        fracverify::CoincidenceError);
    const fracverify::ProblemParams one_d{1, 0.75};
    CHECK_THROWS_AS(
        fracverify::j_tau(one_d, fracverify::KernelOrder::make(1, 0.5), 0.4, 0.4),
        fracverify::CoincidenceError);
}

TEST_CASE("gamma_ns frozen value") {
    CHECK(rel_err(fracverify::gamma_ns(fracverify::ProblemParams{1, 0.75}),
                  1.0 / (kPi * std::sqrt(2.0))) < 1e-13);
}

TEST_CASE("poisson_kernel matches its defining formula") {
    const fracverify::ProblemParams params{2, 0.8};
    const std::array<double, 2> x{0.3, 0.0};
    const std::array<double, 2> y{1.5, 0.5};
    const double value = fracverify::poisson_kernel(params, x, y);
    const double x2 = 0.3 * 0.3;
    const double y2 = 1.5 * 1.5 + 0.5 * 0.5;
    const double d2 = (1.5 - 0.3) * (1.5 - 0.3) + 0.5 * 0.5;
    const double expected = fracverify::gamma_ns(params) * std::pow(1.0 - x2, 0.8) /
                            (d2 * std::pow(y2 - 1.0, 0.8));
    CHECK(rel_err(value, expected) < 1e-13);
}

TEST_CASE("poisson_kernel guards span sizes and the annulus condition") {
    const fracverify::ProblemParams params{2, 0.8};
    const std::array<double, 2> inside{0.3, 0.0};
    const std::array<double, 2> outside{1.5, 0.5};
    const std::array<double, 3> wrong{0.1, 0.2, 0.3};
    CHECK_THROWS_AS(fracverify::poisson_kernel(params, wrong, outside),
                    fracverify::DomainError);
    CHECK_THROWS_AS(fracverify::poisson_kernel(params, outside, outside),
                    fracverify::DomainError);
    CHECK_THROWS_AS(fracverify::poisson_kernel(params, inside, inside),
                    fracverify::DomainError);
}
