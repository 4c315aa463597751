#include "fracverify/specfun.hpp"

#include <cmath>
#include <cstdlib>

namespace fracverify {

namespace {

constexpr double kLogRootTwoPi = 0.91893853320467274178032973640562;
constexpr double kRootTwoPi = 2.50662827463100050241576528481105;

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

double lanczos_sum(double xm1) {
    double acc = kLanczos[0];
    for (int k = 1; k < 9; ++k) {
        acc += kLanczos[k] / (xm1 + k);
    }
    return acc;
}

bool is_nonpos_int(double v) {
    return v <= 0.0 && v == std::floor(v);
}

// Product-form Lanczos evaluation for x > 0, kept separate from the log
// form so that gamma and log_gamma are genuinely distinct routes.
double gamma_positive(double x) {
    const double xm1 = x - 1.0;
    const double base = xm1 + 7.5;
    return kRootTwoPi * std::pow(base, xm1 + 0.5) * std::exp(-base) * lanczos_sum(xm1);
}

constexpr long kSeriesCap = 100000;
constexpr double kSeriesEps = 1e-16;

double hyp_series(double a, double b, double c, double z) {
    double term = 1.0;
    double sum = 1.0;
    int small_streak = 0;
    for (long k = 0; k < kSeriesCap; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (std::fabs(term) <= kSeriesEps * std::fabs(sum)) {
            if (++small_streak >= 3) {
                return sum;
            }
        } else {
            small_streak = 0;
        }
    }
    throw ConvergenceError("hyp2f1 series did not converge within 100000 terms");
}

}  // namespace

double gamma(double x) {
    if (is_nonpos_int(x)) {
        throw PoleError("gamma pole at non-positive integer argument");
    }
    if (x > 0.0) {
        return gamma_positive(x);
    }
    // Recursion Gamma(x) = Gamma(x + m) / (x (x+1) ... (x+m-1)) lifting the
    // argument into [1, 2).
    const int m = static_cast<int>(std::ceil(1.0 - x));
    double denom = 1.0;
    for (int j = 0; j < m; ++j) {
        denom *= x + j;
    }
    return gamma_positive(x + m) / denom;
}

double log_gamma(double x) {
    if (x <= 0.0) {
        throw DomainError("log_gamma requires a positive argument");
    }
    const double xm1 = x - 1.0;
    const double base = xm1 + 7.5;
    return (xm1 + 0.5) * std::log(base) - base + kLogRootTwoPi + std::log(lanczos_sum(xm1));
}

double beta(double z, double w) {
    if (z <= 0.0 || w <= 0.0) {
        throw DomainError("beta requires positive arguments");
    }
    return std::exp(log_gamma(z) + log_gamma(w) - log_gamma(z + w));
}

void HypParams::validate() const {
    if (is_nonpos_int(c)) {
        throw PoleError("hyp2f1 parameter c is a non-positive integer");
    }
    if (z < 0.0) {
        throw DomainError("hyp2f1 argument z must lie in [0, 1)");
    }
    if (z >= 1.0 && !terminates()) {
        throw DomainError("hyp2f1 diverges for z >= 1 with a non-terminating series");
    }
}

bool HypParams::terminates() const {
    return is_nonpos_int(a) || is_nonpos_int(b);
}

double hyp2f1(const HypParams& p) {
    p.validate();
    if (p.terminates()) {
        return hyp_series(p.a, p.b, p.c, p.z);
    }
    if (p.z > 0.75 && p.c - p.a - p.b < 0.25) {
        return std::pow(1.0 - p.z, p.c - p.a - p.b) * hyp_series(p.c - p.a, p.c - p.b, p.c, p.z);
    }
    return hyp_series(p.a, p.b, p.c, p.z);
}

double hyp2f1(double a, double b, double c, double z) {
    return hyp2f1(HypParams{a, b, c, z});
}

}  // namespace fracverify
