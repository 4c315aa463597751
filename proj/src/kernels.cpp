#include "fracverify/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "fracverify/specfun.hpp"

namespace fracverify {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

bool is_nonneg_int(double v) {
    return v >= 0.0 && v == std::floor(v);
}

bool is_nonpos_int(double v) {
    return v <= 0.0 && v == std::floor(v);
}

double norm2(std::span<const double> v) {
    double acc = 0.0;
    for (double c : v) {
        acc += c * c;
    }
    return acc;
}

}  // namespace

void ProblemParams::validate() const {
    if (n < 1) {
        throw DomainError("dimension n must be a positive integer");
    }
    if (!(s > 0.5) || !(s < 1.0)) {
        throw DomainError("order s must lie in (1/2, 1)");
    }
}

KernelOrder KernelOrder::make(int n, double tau) {
    return KernelOrder{tau, is_nonneg_int(tau - 0.5 * n)};
}

double kappa(int n, double tau) {
    if (n < 1) {
        throw DomainError("dimension n must be a positive integer");
    }
    if (is_nonneg_int(tau - 0.5 * n)) {
        throw BranchError("kappa undefined on the logarithmic branch (tau - n/2 non-negative integer)");
    }
    if (is_nonpos_int(tau)) {
        throw PoleError("kappa undefined for tau a non-positive integer");
    }
    return gamma(0.5 * n - tau) /
           (std::pow(4.0, tau) * std::pow(kPi, 0.5 * n) * std::fabs(gamma(tau)));
}

double fundamental(const ProblemParams& params, const KernelOrder& order, double r) {
    params.validate();
    if (!(r > 0.0)) {
        throw DomainError("fundamental requires r > 0");
    }
    const int n = params.n;
    const double tau = order.tau;
    if (order.log_branch != is_nonneg_int(tau - 0.5 * n)) {
        throw BranchError("kernel order branch flag inconsistent with tau - n/2");
    }
    if (!order.log_branch) {
        return kappa(n, tau) * std::pow(r, 2.0 * tau - n);
    }
    const int m = static_cast<int>(std::lround(tau - 0.5 * n));
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;
    const double coef = sign * std::pow(2.0, 1.0 - 2.0 * tau) * std::pow(kPi, -0.5 * n) /
                        (gamma(1.0 + m) * gamma(tau));
    return coef * std::pow(r, 2.0 * tau - n) * std::log(r);
}

double j_tau(const ProblemParams& params, const KernelOrder& order, double x, double y) {
    params.validate();
    if (x < 0.0 || y < 0.0) {
        throw DomainError("j_tau requires non-negative radii");
    }
    const int n = params.n;
    const double tau = order.tau;
    if (x == y) {
        if (x == 0.0 || !(tau > 0.5)) {
            throw CoincidenceError("j_tau diverges on the diagonal for tau <= 1/2");
        }
        if (order.log_branch) {
            throw CoincidenceError("j_tau log branch diverges on the diagonal");
        }
        // Gauss summation of 2F1(n/2 - tau, 1 - tau; n/2 | 1).
        const double value = gamma(0.5 * n) * gamma(2.0 * tau - 1.0) /
                             (gamma(tau) * gamma(0.5 * n + tau - 1.0));
        return kappa(n, tau) * std::pow(x, 2.0 * tau - n) * value;
    }
    if (n == 1) {
        return 0.5 * (fundamental(params, order, std::fabs(x - y)) +
                      fundamental(params, order, x + y));
    }
    if (order.log_branch) {
        throw BranchError("j_tau log branch arises only for n = 1");
    }
    const double hi = std::max(x, y);
    const double lo = std::min(x, y);
    const double ratio = lo / hi;
    return fundamental(params, order, hi) *
           hyp2f1(0.5 * n - tau, 1.0 - tau, 0.5 * n, ratio * ratio);
}

double gamma_ns(const ProblemParams& params) {
    params.validate();
    return gamma(0.5 * params.n) /
           (std::pow(kPi, 0.5 * params.n) * gamma(params.s) * gamma(1.0 - params.s));
}

double poisson_kernel(const ProblemParams& params,
                      std::span<const double> x,
                      std::span<const double> y) {
    params.validate();
    const int n = params.n;
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
        throw DomainError("poisson_kernel points must have dimension n");
    }
    const double x2 = norm2(x);
    const double y2 = norm2(y);
    if (!(x2 < 1.0)) {
        throw DomainError("poisson_kernel requires |x| < 1");
    }
    if (!(y2 > 1.0)) {
        throw DomainError("poisson_kernel requires |y| > 1");
    }
    double d2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double diff = x[i] - y[i];
        d2 += diff * diff;
    }
    const double s = params.s;
    return gamma_ns(params) * std::pow(1.0 - x2, s) /
           (std::pow(d2, 0.5 * n) * std::pow(y2 - 1.0, s));
}

}  // namespace fracverify
