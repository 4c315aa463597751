#include "fracverify/quadrature.hpp"

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "fracverify/specfun.hpp"

namespace fracverify {

namespace {

constexpr int kPanelNodes = 15;
constexpr double kPi = 3.14159265358979323846264338327950288;

struct Rule {
    std::vector<double> x;
    std::vector<double> w;
};

// Implicit QL eigensolver for a symmetric tridiagonal matrix, tracking the
// first component of each eigenvector (EISPACK imtql2 reduced to what
// Golub-Welsch needs). d: diagonal, e: subdiagonal (e[n-1] ignored),
// z: on entry (sqrt(mu0), 0, ..., 0), on exit the weight amplitudes.
void imtqlx(int n, std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    if (n == 1) {
        return;
    }
    e[n - 1] = 0.0;
    const double prec = 2.220446049250313e-16;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                if (std::fabs(e[m]) <= prec * (std::fabs(d[m]) + std::fabs(d[m + 1]))) {
                    break;
                }
            }
            if (m == l) {
                break;
            }
            if (++iter > 40) {
                throw NumericalError("quadrature eigensolver failed to converge");
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                double bb = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * bb;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - bb;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    // Sort ascending, carrying the amplitudes along.
    for (int i = 0; i < n - 1; ++i) {
        int k = i;
        for (int j = i + 1; j < n; ++j) {
            if (d[j] < d[k]) {
                k = j;
            }
        }
        if (k != i) {
            std::swap(d[i], d[k]);
            std::swap(z[i], z[k]);
        }
    }
}

// Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on (-1, 1),
// by the Golub-Welsch recurrence coefficients.
Rule gauss_jacobi(int n, double alpha, double beta) {
    const double ab = alpha + beta;
    std::vector<double> d(n), e(n), z(n, 0.0);
    const double mu0 =
        std::pow(2.0, ab + 1.0) *
        std::exp(std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
    d[0] = (beta - alpha) / (ab + 2.0);
    if (n > 1) {
        e[0] = std::sqrt(4.0 * (alpha + 1.0) * (beta + 1.0) / ((ab + 3.0) * (ab + 2.0) * (ab + 2.0)));
    }
    for (int k = 1; k < n; ++k) {
        const double q = 2.0 * k + ab;
        d[k] = (beta * beta - alpha * alpha) / (q * (q + 2.0));
        if (k >= 1 && k < n - 1) {
            const double kk = k + 1.0;
            const double qq = 2.0 * kk + ab;
            e[k] = std::sqrt(4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab) /
                             (qq * qq * (qq + 1.0) * (qq - 1.0)));
        }
    }
    z[0] = std::sqrt(mu0);
    imtqlx(n, d, e, z);
    Rule rule;
    rule.x = std::move(d);
    rule.w.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.w[i] = z[i] * z[i];
    }
    return rule;
}

// Rule on (0,1) for the weight t^expl (1-t)^expr, mapped from (-1,1).
const Rule& unit_rule(double expl, double expr) {
    thread_local std::map<std::pair<double, double>, Rule> cache;
    auto key = std::make_pair(expl, expr);
    auto it = cache.find(key);
    if (it != cache.end()) {
        return it->second;
    }
    Rule raw = gauss_jacobi(kPanelNodes, expr, expl);
    Rule mapped;
    mapped.x.resize(kPanelNodes);
    mapped.w.resize(kPanelNodes);
    const double scale = std::pow(2.0, -(expl + expr + 1.0));
    for (int i = 0; i < kPanelNodes; ++i) {
        mapped.x[i] = 0.5 * (raw.x[i] + 1.0);
        mapped.w[i] = raw.w[i] * scale;
    }
    return cache.emplace(key, std::move(mapped)).first->second;
}

struct PanelIntegrator {
    const std::function<double(double)>& f;
    double alpha;
    double beta;

    // Integral of f(t) t^alpha (1-t)^beta over [lo, hi], with the endpoint
    // weights absorbed by the rule whenever the panel touches 0 or 1.
    double panel(double lo, double hi) const {
        if (lo == 0.0 && hi == 1.0) {
            const Rule& r = unit_rule(alpha, beta);
            double acc = 0.0;
            for (int i = 0; i < kPanelNodes; ++i) {
                acc += r.w[i] * f(r.x[i]);
            }
            return acc;
        }
        if (lo == 0.0) {
            const Rule& r = unit_rule(alpha, 0.0);
            double acc = 0.0;
            for (int i = 0; i < kPanelNodes; ++i) {
                const double t = hi * r.x[i];
                acc += r.w[i] * std::pow(1.0 - t, beta) * f(t);
            }
            return acc * std::pow(hi, alpha + 1.0);
        }
        if (hi == 1.0) {
            const Rule& r = unit_rule(0.0, beta);
            double acc = 0.0;
            const double len = 1.0 - lo;
            for (int i = 0; i < kPanelNodes; ++i) {
                const double t = lo + len * r.x[i];
                acc += r.w[i] * std::pow(t, alpha) * f(t);
            }
            return acc * std::pow(len, beta + 1.0);
        }
        const Rule& r = unit_rule(0.0, 0.0);
        double acc = 0.0;
        const double len = hi - lo;
        for (int i = 0; i < kPanelNodes; ++i) {
            const double t = lo + len * r.x[i];
            acc += r.w[i] * std::pow(t, alpha) * std::pow(1.0 - t, beta) * f(t);
        }
        return acc * len;
    }

    double adapt(double lo, double hi, double tol, int depth, int max_depth,
                 long& node_budget, double& err_total, bool& exhausted) const {
        --node_budget;
        const double coarse = panel(lo, hi);
        const double mid = 0.5 * (lo + hi);
        const double fine = panel(lo, mid) + panel(mid, hi);
        const double err = std::fabs(fine - coarse);
        const double fp_floor = 1e-13 * (std::fabs(fine) + std::fabs(coarse));
        if (err <= tol || (depth >= 3 && err <= fp_floor)) {
            err_total += err;
            return fine;
        }
        if (depth >= max_depth || node_budget <= 0 || exhausted) {
            err_total += err;
            exhausted = true;
            return fine;
        }
        const double child_tol = std::max(0.5 * tol, 1e-18);
        return adapt(lo, mid, child_tol, depth + 1, max_depth, node_budget, err_total,
                     exhausted) +
               adapt(mid, hi, child_tol, depth + 1, max_depth, node_budget, err_total,
                     exhausted);
    }
};

}  // namespace

void QuadratureSpec::validate() const {
    if (!(alpha > -1.0) || !(beta > -1.0)) {
        throw DomainError("quadrature endpoint exponents must exceed -1");
    }
    if (!(tol > 0.0)) {
        throw DomainError("quadrature tolerance must be positive");
    }
    if (max_subdivisions <= 0) {
        throw DomainError("quadrature subdivision budget must be positive");
    }
}

QuadResult integrate_unit(const std::function<double(double)>& f, const QuadratureSpec& spec) {
    spec.validate();
    PanelIntegrator pi{f, spec.alpha, spec.beta};
    double err_total = 0.0;
    bool exhausted = false;
    long node_budget = 20000;
    const double value = pi.adapt(0.0, 1.0, spec.tol, 0, spec.max_subdivisions, node_budget,
                                  err_total, exhausted);
    if (!(err_total <= spec.tol)) {
        throw ToleranceError("adaptive quadrature did not meet the error target", value, err_total);
    }
    return {value, err_total};
}

QuadResult integrate_tail(const std::function<double(double)>& f, double s,
                          const QuadratureSpec& spec) {
    if (!(s > 0.5) || !(s < 1.0)) {
        throw DomainError("integrate_tail requires s in (1/2, 1)");
    }
    QuadratureSpec mapped = spec;
    mapped.alpha = 2.0 * s - 2.0;
    mapped.beta = -s;
    return integrate_unit([&f, s](double t) { return f(1.0 / t) * std::pow(1.0 + t, -s); },
                          mapped);
}

double sphere_mean(const ProblemParams& params, const std::function<double(double)>& g,
                   double r, double y, const QuadratureSpec& spec) {
    params.validate();
    if (params.n == 1) {
        throw DomainError("sphere_mean requires n >= 2; use the two-point mean for n = 1");
    }
    if (!(r > 0.0) || y < 0.0) {
        throw DomainError("sphere_mean requires r > 0 and y >= 0");
    }
    const double nu = 0.5 * (params.n - 3.0);
    QuadratureSpec jac = spec;
    jac.alpha = nu;
    jac.beta = nu;
    // theta . e1 = 1 - 2v, so |theta - y e1| = sqrt((r-y)^2 + 4 r y v).
    const double c0 = (r - y) * (r - y);
    const double c1 = 4.0 * r * y;
    const QuadResult num = integrate_unit(
        [&](double v) { return g(std::sqrt(c0 + c1 * v)); }, jac);
    const QuadResult den = integrate_unit([](double) { return 1.0; }, jac);
    return num.value / den.value;
}

double poisson_extension(const ProblemParams& params, const std::function<double(double)>& g,
                         double x, const QuadratureSpec& spec) {
    params.validate();
    if (x < 0.0 || x >= 1.0) {
        throw DomainError("poisson_extension requires 0 <= x < 1");
    }
    const double s = params.s;
    const double gns = gamma_ns(params);
    const double boundary_factor = gns * std::pow(1.0 - x * x, s);
    if (params.n == 1) {
        return boundary_factor *
               integrate_tail(
                   [&g, x](double rho) {
                       return g(rho) * (1.0 / (rho - x) + 1.0 / (rho + x));
                   },
                   s, spec)
                   .value;
    }
    const int n = params.n;
    const double surface = 2.0 * std::pow(kPi, 0.5 * n) / std::exp(std::lgamma(0.5 * n));
    QuadratureSpec inner = spec;
    inner.tol = std::max(spec.tol * 1e-2, 1e-13);
    const auto radial = [&](double rho) {
        const double mean = sphere_mean(
            params, [n](double d) { return std::pow(d, -static_cast<double>(n)); }, rho, x,
            inner);
        return std::pow(rho, n - 1.0) * g(rho) * mean;
    };
    return boundary_factor * surface * integrate_tail(radial, s, spec).value;
}

}  // namespace fracverify
