#include "fracverify/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>

#include "fracverify/eigenbounds.hpp"
#include "fracverify/specfun.hpp"

namespace fracverify {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kRootPi = 1.77245385090551602729816748334115;

std::vector<double> axis_points(double lo, double hi, double step) {
    const long count = std::lround((hi - lo) / step) - 1;
    if (count < 1) {
        throw ConfigError("grid axis has no interior points");
    }
    std::vector<double> pts;
    pts.reserve(static_cast<size_t>(count));
    for (long j = 1; j <= count; ++j) {
        pts.push_back(lo + static_cast<double>(j) * step);
    }
    return pts;
}

void apply_exclusions(std::vector<double>& pts,
                      const std::vector<std::pair<double, double>>& exclusions) {
    if (exclusions.empty()) {
        return;
    }
    pts.erase(std::remove_if(pts.begin(), pts.end(),
                             [&](double v) {
                                 for (const auto& [center, halfwidth] : exclusions) {
                                     if (std::fabs(v - center) <= halfwidth + 1e-12) {
                                         return true;
                                     }
                                 }
                                 return false;
                             }),
              pts.end());
}

struct ScanMin {
    double value = std::numeric_limits<double>::infinity();
    double at_s = std::numeric_limits<double>::quiet_NaN();
    double at_x = std::numeric_limits<double>::quiet_NaN();
    long points = 0;
    long clamped = 0;

    void offer(double v, double s, double x) {
        ++points;
        if (v < value) {
            value = v;
            at_s = s;
            at_x = x;
        }
    }
};

// Per-s hoisted constants of the reduced high-dimensional conditions.
struct HighDRow {
    double s;
    double epow;     // exponent of the leading power x^(4s-2-n)
    double a, b, c;  // hypergeometric parameters (variant C)
    double mlog;     // log of the constant multiplying (1-x^2)^(s-2)
};

HighDRow make_high_d_row(const ProblemParams& params) {
    const double s = params.s;
    const double n2 = 0.5 * params.n;
    const double mlog = std::log(big_m(params)) + log_gamma(n2 + 1.0) + log_gamma(1.0 - s) -
                        std::log(2.0) - log_gamma(n2 + 2.0 - s);
    return HighDRow{s, 4.0 * s - 2.0 - params.n, n2 + 1.0 - 2.0 * s, 2.0 - 2.0 * s, n2, mlog};
}

double eval_qc(const HighDRow& row, double x) {
    const double z = x * x;
    return std::pow(x, row.epow) - hyp2f1(row.a, row.b, row.c, z) +
           std::exp(row.mlog + (row.s - 2.0) * std::log1p(-z));
}

double eval_qd(const HighDRow& row, double x) {
    const double z = x * x;
    return std::pow(x, row.epow) - std::exp((2.0 * row.s - 2.0) * std::log1p(-z)) +
           std::exp(row.mlog + (row.s - 2.0) * std::log1p(-z));
}

ScanMin scan_high_d(int n, const GridSpec& grid, CaseId variant) {
    ScanMin acc;
    for (double s : grid.s_points()) {
        const HighDRow row = make_high_d_row(ProblemParams{n, s});
        for (double x : grid.x_points()) {
            const double v =
                variant == CaseId::HighD_C ? eval_qc(row, x) : eval_qd(row, x);
            acc.offer(v, s, x);
        }
    }
    return acc;
}

ScanMin scan_one_d(double a, double b, const GridSpec& grid) {
    ScanMin acc;
    for (double s : grid.s_points()) {
        const double raw = x_ab(s, a, b);
        const double x = std::clamp(raw, a, b);
        if (x != raw) {
            ++acc.clamped;
        }
        acc.offer(q_ab(s, x, a, b), s, x);
    }
    return acc;
}

std::string format_note(const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    return std::string(buf);
}

}  // namespace

void GridSpec::validate() const {
    if (!(s_step > 0.0) || !(x_step > 0.0)) {
        throw ConfigError("grid steps must be positive");
    }
    if (!(s_min < s_max) || !(x_min < x_max)) {
        throw ConfigError("grid bounds must satisfy min < max");
    }
    if (std::lround((s_max - s_min) / s_step) < 2 || std::lround((x_max - x_min) / x_step) < 2) {
        throw ConfigError("grid axis has no interior points");
    }
    for (const auto& [center, halfwidth] : exclusions) {
        (void)center;
        if (halfwidth < 0.0) {
            throw ConfigError("exclusion halfwidth must be non-negative");
        }
    }
}

std::vector<double> GridSpec::s_points() const {
    std::vector<double> pts = axis_points(s_min, s_max, s_step);
    apply_exclusions(pts, exclusions);
    return pts;
}

std::vector<double> GridSpec::x_points() const {
    return axis_points(x_min, x_max, x_step);
}

GridSpec GridSpec::refined() const {
    GridSpec r = *this;
    // Shrink the bounds by half a step so the inclusive hull
    // [min + step, max - step] is preserved while the step halves.
    r.s_min = s_min + 0.5 * s_step;
    r.s_max = s_max - 0.5 * s_step;
    r.x_min = x_min + 0.5 * x_step;
    r.x_max = x_max - 0.5 * x_step;
    r.s_step = 0.5 * s_step;
    r.x_step = 0.5 * x_step;
    return r;
}

std::string to_string(CaseId id) {
    switch (id) {
        case CaseId::LogCase: return "LogCase";
        case CaseId::OneD: return "OneD";
        case CaseId::HighD_C: return "HighD_C";
        case CaseId::HighD_D: return "HighD_D";
    }
    return "Unknown";
}

std::pair<double, double> SubintervalFamily::interval(int i) {
    if (i < 0 || i >= count) {
        throw ConfigError("subinterval index out of range");
    }
    return {breakpoints[static_cast<size_t>(i)], breakpoints[static_cast<size_t>(i) + 1]};
}

double x_star(const ProblemParams& params) {
    params.validate();
    if (params.n == 1 && params.s == 0.75) {
        return 2.0 / 3.0;
    }
    const double theta = 4.0 * params.s - 2.0 - params.n;
    return 1.0 / (1.0 + std::pow(2.0 - std::pow(2.0, theta), 1.0 / theta));
}

double mu(double s) {
    if (!(s > 0.5) || !(s < 1.0)) {
        throw DomainError("mu requires s in (1/2, 1)");
    }
    const double g_s = gamma(s);
    return std::pow(2.0, 2.0 * s - 1.0) * (1.0 - s) * kRootPi / s * gamma(1.5 + s) *
           gamma(2.0 * s - 1.0) /
           (g_s * g_s * g_s * gamma(1.5 + 2.0 * s) * gamma(2.5 - 2.0 * s));
}

std::array<double, 2> mu_forms(double s) {
    if (!(s > 0.5) || !(s < 1.0)) {
        throw DomainError("mu requires s in (1/2, 1)");
    }
    const double lambda = lambda_upper(ProblemParams{1, s}).lambda_upper;
    const double form1 =
        1.0 / (std::pow(2.0, 2.0 * s - 1.0) * lambda * gamma(s) * std::fabs(gamma(s - 1.0))) *
        std::pow(2.0, 4.0 * s - 2.0) * kRootPi * gamma(2.0 * s - 1.0) / gamma(2.5 - 2.0 * s);
    return {form1, mu(s)};
}

double q_ab(double s, double x, double a, double b) {
    if (!(s > 0.5) || !(s < 1.0)) {
        throw DomainError("q_ab requires s in (1/2, 1)");
    }
    if (s == 0.75) {
        throw DomainError("q_ab has a removable singularity at s = 3/4; use the log-case certificate");
    }
    if (!(a > 0.5) || !(a < b) || !(b <= 1.0)) {
        throw DomainError("q_ab requires 1/2 < a < b <= 1");
    }
    if (!(x > 0.0) || !(x < 1.0)) {
        throw DomainError("q_ab requires x in (0, 1)");
    }
    const double theta = 4.0 * s - 3.0;
    const double num =
        2.0 * std::pow(b, theta) - std::pow(1.0 + b, theta) - std::pow(1.0 - x, theta);
    return num / (3.0 - 4.0 * s) +
           std::pow(1.0 + b, s - 2.0) * (2.0 * a - 1.0) * mu(s) * std::pow(1.0 - x, s - 2.0);
}

double x_ab(double s, double a, double b) {
    if (!(s > 0.5) || !(s < 1.0)) {
        throw DomainError("x_ab requires s in (1/2, 1)");
    }
    if (s == 0.75) {
        throw DomainError("x_ab has a removable singularity at s = 3/4; use the log-case certificate");
    }
    if (!(a > 0.5) || !(a < b) || !(b <= 1.0)) {
        throw DomainError("x_ab requires 1/2 < a < b <= 1");
    }
    const double inner = std::pow(1.0 + b, s - 2.0) * (2.0 * a - 1.0) * (2.0 - s) * mu(s);
    return 1.0 - std::pow(inner, 1.0 / (3.0 * s - 1.0));
}

double one_d_expression(double s, double x) {
    if (!(s > 0.5) || !(s < 1.0)) {
        throw DomainError("one_d_expression requires s in (1/2, 1)");
    }
    if (s == 0.75) {
        throw DomainError("one_d_expression has a removable singularity at s = 3/4");
    }
    if (!(x > 0.0) || !(x < 1.0)) {
        throw DomainError("one_d_expression requires x in (0, 1)");
    }
    const double theta = 4.0 * s - 3.0;
    const double num = 2.0 * std::pow(x, theta) - std::pow(1.0 - x, theta) -
                       std::pow(1.0 + x, theta);
    return num / (3.0 - 4.0 * s) +
           mu(s) * std::pow(1.0 - x * x, s - 2.0) * (2.0 * x - 1.0);
}

double log_case_constant() {
    const double g14 = gamma(0.25);
    const double g34 = gamma(0.75);
    return 5.0 * g14 * g14 / (48.0 * g34 * g34);
}

double log_case_stationary_point() {
    const double c = log_case_constant();
    return c / (c + 1.0);
}

double log_case_closed_form_min() {
    const double c = log_case_constant();
    return std::log(c) + 1.0 - 0.5 * c;
}

double log_case_expression(double t) {
    if (!(t > 0.0) || !(t < 5.0 / 9.0)) {
        throw DomainError("log-case expression requires t in (0, 5/9)");
    }
    const double c = log_case_constant();
    return -std::log1p(-t) + std::log(t) + c * (1.0 - 1.5 * t) / t;
}

ScanReport log_case_certificate(long points) {
    if (points < 3) {
        throw ConfigError("log-case scan needs at least 3 points");
    }
    const double hi = 5.0 / 9.0;
    const auto scan = [hi](double step) {
        ScanMin acc;
        const long count = std::lround(hi / step) - 1;
        for (long j = 1; j <= count; ++j) {
            const double t = static_cast<double>(j) * step;
            acc.offer(log_case_expression(t), 0.75, t);
        }
        return acc;
    };
    const double step = hi / static_cast<double>(points + 1);
    const ScanMin coarse = scan(step);
    const ScanMin fine = scan(0.5 * step);
    const double closed = log_case_closed_form_min();

    ScanReport report;
    report.case_id = CaseId::LogCase;
    report.n = 1;
    report.s = 0.75;
    report.grid.s_min = 0.75;
    report.grid.s_max = 0.75;
    report.grid.s_step = 0.0;
    report.grid.x_min = 0.0;
    report.grid.x_max = hi;
    report.grid.x_step = step;
    report.min_value = coarse.value;
    report.argmin_s = 0.75;
    report.argmin_x = coarse.at_x;
    report.passed = closed > 0.0 && coarse.value > 0.0 && fine.value > 0.0;
    report.points_evaluated = coarse.points + fine.points;
    report.refinement_delta = std::fabs(coarse.value - fine.value);
    report.notes = format_note(
        "closed-form constant c=%.17g stationary t=%.17g minimum %.17g; scan variable is t=1-x^2",
        log_case_constant(), log_case_stationary_point(), closed);
    return report;
}

double big_m(const ProblemParams& params) {
    params.validate();
    if (params.n < 2) {
        throw DomainError("big_m requires n >= 2");
    }
    const double s = params.s;
    const double n2 = 0.5 * params.n;
    const double lg = std::log1p(-s) + log_gamma(1.0 + 2.0 * s) + log_gamma(2.0 * s - 1.0) -
                      2.0 * std::log(s) - 4.0 * log_gamma(s) - log_gamma(1.0 - s) +
                      std::log(params.n + 2.0 * s) + log_gamma(n2) + log_gamma(n2 + 1.0 - s) -
                      log_gamma(n2 + 1.0 + 2.0 * s) - log_gamma(n2 + 1.0 - 2.0 * s);
    return std::exp(lg);
}

std::array<double, 3> big_m_forms(const ProblemParams& params) {
    params.validate();
    if (params.n < 2) {
        throw DomainError("big_m requires n >= 2");
    }
    const int n = params.n;
    const double s = params.s;
    const double n2 = 0.5 * n;
    const double lambda = lambda_upper(params).lambda_upper;
    const double form1 = 2.0 * std::pow(kPi, n2) * gamma_ns(params) * kappa(n, s - 1.0) /
                         (gamma(n2) * lambda * kappa(n, 2.0 * s - 1.0));
    const double form2 = 2.0 / (gamma(s) * gamma(1.0 - s)) *
                         ((n2 + s) * gamma(n2) * gamma(1.0 + 2.0 * s) /
                          (std::pow(2.0, 2.0 * s) * gamma(1.0 + s) * gamma(1.0 + s) *
                           gamma(n2 + 1.0 + 2.0 * s))) *
                         (gamma(n2 + 1.0 - s) /
                          (std::pow(2.0, 2.0 * s - 3.0) * std::fabs(gamma(s - 1.0)))) *
                         (std::pow(2.0, 4.0 * s - 3.0) * gamma(2.0 * s - 1.0) /
                          gamma(n2 + 1.0 - 2.0 * s));
    const double form3 = (1.0 - s) * gamma(1.0 + 2.0 * s) * gamma(2.0 * s - 1.0) /
                         (s * s * std::pow(gamma(s), 4.0) * gamma(1.0 - s)) *
                         ((n + 2.0 * s) * gamma(n2) * gamma(n2 + 1.0 - s) /
                          (gamma(n2 + 1.0 + 2.0 * s) * gamma(n2 + 1.0 - 2.0 * s)));
    return {form1, form2, form3};
}

double lhs_qc(const ProblemParams& params, double x) {
    params.validate();
    if (params.n < 2) {
        throw DomainError("lhs_qc requires n >= 2");
    }
    if (!(x > 0.0) || !(x < 1.0)) {
        throw DomainError("lhs_qc requires x in (0, 1)");
    }
    return eval_qc(make_high_d_row(params), x);
}

double lhs_qd(const ProblemParams& params, double x) {
    params.validate();
    if (params.n < 4) {
        throw DomainError("lhs_qd requires n >= 4 (the series bound needs it)");
    }
    if (!(x > 0.0) || !(x < 1.0)) {
        throw DomainError("lhs_qd requires x in (0, 1)");
    }
    return eval_qd(make_high_d_row(params), x);
}

std::vector<ScanReport> verify_one_d(const GridSpec& grid) {
    grid.validate();
    GridSpec eff = grid;
    eff.exclusions.emplace_back(0.75, std::max(1e-3, grid.s_step));
    std::vector<ScanReport> reports;
    for (int i = 0; i < SubintervalFamily::count; ++i) {
        const auto [a, b] = SubintervalFamily::interval(i);
        const ScanMin coarse = scan_one_d(a, b, eff);
        const ScanMin fine = scan_one_d(a, b, eff.refined());
        ScanReport rep;
        rep.case_id = CaseId::OneD;
        rep.n = 1;
        rep.a = a;
        rep.b = b;
        rep.grid = eff;
        rep.grid.x_min = a;
        rep.grid.x_max = b;
        rep.grid.x_step = 0.0;
        rep.min_value = coarse.value;
        rep.argmin_s = coarse.at_s;
        rep.argmin_x = coarse.at_x;
        rep.passed = coarse.value > 0.0 && fine.value > 0.0;
        rep.points_evaluated = coarse.points + fine.points;
        rep.refinement_delta = std::fabs(coarse.value - fine.value);
        rep.clamped_points = coarse.clamped;
        rep.oracle_normalization = qbis_oracle_normalization(ProblemParams{1, coarse.at_s});
        rep.notes = format_note(
            "x evaluated at clamp(x_ab(s), a, b); clamped %ld of %ld coarse rows; refined min %.17g",
            coarse.clamped, coarse.points, fine.value);
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<ScanReport> verify_high_d(const std::vector<int>& dims, const GridSpec& grid,
                                      CaseId variant) {
    grid.validate();
    if (variant != CaseId::HighD_C && variant != CaseId::HighD_D) {
        throw ConfigError("high-d variant must be HighD_C or HighD_D");
    }
    std::vector<ScanReport> reports;
    for (int n : dims) {
        if (variant == CaseId::HighD_C && n < 2) {
            throw DomainError("the C condition requires n >= 2");
        }
        if (variant == CaseId::HighD_D && n < 4) {
            throw DomainError("the D condition requires n >= 4");
        }
        const ScanMin coarse = scan_high_d(n, grid, variant);
        const ScanMin fine = scan_high_d(n, grid.refined(), variant);
        ScanReport rep;
        rep.case_id = variant;
        rep.n = n;
        rep.grid = grid;
        rep.min_value = coarse.value;
        rep.argmin_s = coarse.at_s;
        rep.argmin_x = coarse.at_x;
        rep.passed = coarse.value > 0.0 && fine.value > 0.0;
        rep.points_evaluated = coarse.points + fine.points;
        rep.refinement_delta = std::fabs(coarse.value - fine.value);
        rep.oracle_normalization = qbis_oracle_normalization(ProblemParams{n, coarse.at_s});
        rep.notes = format_note("refined min %.17g at step/2 on the same hull", fine.value);
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::vector<double> high_d_min_curve(int n, const GridSpec& grid, CaseId variant) {
    grid.validate();
    if (variant != CaseId::HighD_C && variant != CaseId::HighD_D) {
        throw ConfigError("high-d variant must be HighD_C or HighD_D");
    }
    std::vector<double> curve;
    for (double s : grid.s_points()) {
        const HighDRow row = make_high_d_row(ProblemParams{n, s});
        double best = std::numeric_limits<double>::infinity();
        for (double x : grid.x_points()) {
            const double v =
                variant == CaseId::HighD_C ? eval_qc(row, x) : eval_qd(row, x);
            best = std::min(best, v);
        }
        curve.push_back(best);
    }
    return curve;
}

double qbis_oracle_normalization(const ProblemParams& params) {
    params.validate();
    const int n = params.n;
    const double s = params.s;
    if (n == 1) {
        if (s == 0.75) {
            throw DomainError("the oracle normalization is singular at (n, s) = (1, 3/4)");
        }
        return 2.0 / (kappa(1, 2.0 * s - 1.0) * (3.0 - 4.0 * s));
    }
    return 1.0 / kappa(n, 2.0 * s - 1.0);
}

double direct_qbis_oracle(const ProblemParams& params, double x, const QuadratureSpec& spec) {
    params.validate();
    const int n = params.n;
    const double s = params.s;
    if (!(x > x_star(params)) || !(x < 1.0)) {
        throw DomainError("direct_qbis_oracle requires x_star(n, s) < x < 1");
    }
    const double lambda = lambda_upper(params).lambda_upper;
    const double norm = qbis_oracle_normalization(params);
    const KernelOrder o1 = KernelOrder::make(n, 2.0 * s - 1.0);
    const KernelOrder o2 = KernelOrder::make(n, s - 1.0);
    if (n == 1) {
        const double a_term = j_tau(params, o1, x, 0.0) - j_tau(params, o1, x, 1.0);
        const double b_term =
            2.0 * gamma_ns(params) *
            integrate_tail(
                [&](double rho) { return j_tau(params, o2, x, rho) / rho; }, s, spec)
                .value;
        return norm * (a_term + b_term / lambda);
    }
    QuadratureSpec inner = spec;
    inner.tol = std::max(spec.tol * 1e-2, 1e-13);
    const auto mean_of_kernel = [&](const KernelOrder& order, double rho,
                                    const QuadratureSpec& qs) {
        return sphere_mean(
            params, [&](double d) { return fundamental(params, order, d); }, x, rho, qs);
    };
    const double a_term = fundamental(params, o1, x) - mean_of_kernel(o1, 1.0, spec);
    const double surface = 2.0 * std::pow(kPi, 0.5 * n) / gamma(0.5 * n);
    const double b_term =
        gamma_ns(params) * surface *
        integrate_tail(
            [&](double rho) { return mean_of_kernel(o2, rho, inner) / rho; }, s, spec)
            .value;
    return norm * (a_term + b_term / lambda);
}

}  // namespace fracverify
