#include "fracverify/eigenbounds.hpp"

#include <cmath>

#include "fracverify/specfun.hpp"

namespace fracverify {

namespace {
constexpr double kLn4 = 1.38629436111989061883446424291635;
constexpr double kRootPi = 1.77245385090551602729816748334115;
}  // namespace

double torsion_constant(const ProblemParams& params) {
    params.validate();
    const double n2 = 0.5 * params.n;
    const double s = params.s;
    return std::exp(log_gamma(n2) - s * kLn4 - log_gamma(1.0 + s) - log_gamma(s + n2));
}

EigenBound lambda_upper(const ProblemParams& params) {
    params.validate();
    const double n2 = 0.5 * params.n;
    const double s = params.s;
    const double lg = s * kLn4 + 2.0 * log_gamma(1.0 + s) + log_gamma(1.0 + 2.0 * s + n2) -
                      std::log(s + n2) - log_gamma(n2) - log_gamma(1.0 + 2.0 * s);
    return EigenBound{params.n, s, std::exp(lg)};
}

double lambda_upper_torsion_form(const ProblemParams& params) {
    params.validate();
    const double n2 = 0.5 * params.n;
    const double s = params.s;
    return std::exp(log_gamma(1.0 + s) + log_gamma(1.0 + 2.0 * s + n2) - log_gamma(1.0 + 2.0 * s) -
                    log_gamma(1.0 + s + n2)) /
           torsion_constant(params);
}

std::array<double, 4> lambda_upper_one_d_chain(double s) {
    if (!(s > 0.5) || !(s < 1.0)) {
        throw DomainError("order s must lie in (1/2, 1)");
    }
    const double f1 = std::pow(4.0, s) * gamma(1.0 + s) * gamma(1.0 + s) *
                      gamma(1.5 + 2.0 * s) /
                      ((0.5 + s) * gamma(0.5) * gamma(1.0 + 2.0 * s));
    const double f2 = s * std::pow(4.0, s) * gamma(s) * gamma(s) * gamma(1.5 + 2.0 * s) /
                      (kRootPi * (1.0 + 2.0 * s) * gamma(2.0 * s));
    const double f3 = 2.0 * s * gamma(s) * gamma(1.5 + 2.0 * s) /
                      ((1.0 + 2.0 * s) * gamma(0.5 + s));
    const double f4 = gamma(1.0 + s) * gamma(1.5 + 2.0 * s) / gamma(1.5 + s);
    return {f1, f2, f3, f4};
}

}  // namespace fracverify
