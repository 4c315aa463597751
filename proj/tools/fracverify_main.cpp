#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracverify/eigenbounds.hpp"
#include "fracverify/identities.hpp"
#include "fracverify/report.hpp"
#include "fracverify/verifier.hpp"

namespace fs = std::filesystem;
using namespace fracverify;
using ordered_json = nlohmann::ordered_json;

namespace {

struct OutputConfig {
    std::string dir = "out";
    bool csv = true;
    bool json = true;
};

void apply_format(OutputConfig& out, const std::string& format) {
    out.csv = format == "csv" || format == "both";
    out.json = format == "json" || format == "both";
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw ConfigError("cannot create output directory: " + dir);
    }
}

std::string path_join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

std::pair<double, double> parse_exclusion(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ConfigError("exclusion must be center:halfwidth, got: " + text);
    }
    try {
        const double center = std::stod(text.substr(0, colon));
        const double halfwidth = std::stod(text.substr(colon + 1));
        return {center, halfwidth};
    } catch (const std::exception&) {
        throw ConfigError("exclusion must be center:halfwidth, got: " + text);
    }
}

CurveSample log_case_curve(long points) {
    CurveSample sample;
    sample.columns = {"t", "value"};
    const double hi = 5.0 / 9.0;
    const double step = hi / static_cast<double>(points + 1);
    for (long j = 1; j <= points; ++j) {
        const double t = static_cast<double>(j) * step;
        sample.rows.push_back({t, log_case_expression(t)});
    }
    sample.sort_rows();
    return sample;
}

CurveSample one_d_panels(const GridSpec& grid) {
    CurveSample sample;
    sample.columns = {"a", "b", "s", "x", "value"};
    GridSpec eff = grid;
    eff.exclusions.emplace_back(0.75, std::max(1e-3, grid.s_step));
    for (int i = 0; i < SubintervalFamily::count; ++i) {
        const auto [a, b] = SubintervalFamily::interval(i);
        for (double s : eff.s_points()) {
            const double x = std::clamp(x_ab(s, a, b), a, b);
            sample.rows.push_back({a, b, s, x, q_ab(s, x, a, b)});
        }
    }
    sample.sort_rows();
    return sample;
}

CurveSample x_star_curve(double s_step) {
    CurveSample sample;
    sample.columns = {"s", "x_star"};
    GridSpec grid;
    grid.s_step = s_step;
    for (double s : grid.s_points()) {
        sample.rows.push_back({s, x_star(ProblemParams{1, s})});
    }
    sample.sort_rows();
    return sample;
}

CurveSample heat_grid(int n, const GridSpec& grid, CaseId variant) {
    CurveSample sample;
    sample.columns = {"s", "x", "value"};
    for (double s : grid.s_points()) {
        const ProblemParams params{n, s};
        for (double x : grid.x_points()) {
            const double v =
                variant == CaseId::HighD_C ? lhs_qc(params, x) : lhs_qd(params, x);
            sample.rows.push_back({s, x, std::min(0.1, v)});
        }
    }
    sample.sort_rows();
    return sample;
}

int run_identities(bool as_json, double perturb) {
    const auto results = run_identity_suite(perturb);
    bool all_passed = true;
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
    }
    if (as_json) {
        std::cout << to_json(results);
    } else {
        std::printf("%-34s %12s %10s %7s  %s\n", "identity", "max_rel_err", "tolerance",
                    "points", "status");
        for (const auto& r : results) {
            std::printf("%-34s %12.3e %10.1e %7ld  %s\n", r.name.c_str(), r.max_rel_err,
                        r.tolerance, r.points, r.passed ? "pass" : "FAIL");
        }
        std::printf("suite: %s\n", all_passed ? "pass" : "FAIL");
    }
    return all_passed ? 0 : 1;
}

int run_verify_log(const OutputConfig& out) {
    const ScanReport report = log_case_certificate(200000);
    ensure_dir(out.dir);
    if (out.json) {
        write_file(path_join(out.dir, "log_case_report.json"), to_json(report));
    }
    if (out.csv) {
        write_file(path_join(out.dir, "log_case_curve.csv"), to_csv(log_case_curve(2001)));
    }
    std::printf("log-case: min %.17g at t=%.17g, closed form %.17g, %s\n", report.min_value,
                report.argmin_x, log_case_closed_form_min(),
                report.passed ? "passed" : "FAILED");
    return report.passed ? 0 : 1;
}

int run_verify_one_d(const GridSpec& grid, const OutputConfig& out) {
    const auto reports = verify_one_d(grid);
    ensure_dir(out.dir);
    if (out.json) {
        write_file(path_join(out.dir, "one_d_report.json"), to_json(reports));
    }
    if (out.csv) {
        write_file(path_join(out.dir, "one_d_panels.csv"), to_csv(one_d_panels(grid)));
    }
    bool all_passed = true;
    for (const auto& r : reports) {
        std::printf("one-d (%g, %g]: min %.17g at s=%.17g, delta %.3e, %s\n", r.a, r.b,
                    r.min_value, r.argmin_s, r.refinement_delta,
                    r.passed ? "passed" : "FAILED");
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
}

int run_verify_high_d(const std::vector<int>& dims, const GridSpec& grid, CaseId variant,
                      const OutputConfig& out) {
    const auto reports = verify_high_d(dims, grid, variant);
    ensure_dir(out.dir);
    const char* tag = variant == CaseId::HighD_C ? "c" : "d";
    if (out.json) {
        write_file(path_join(out.dir, std::string("high_d_") + tag + "_report.json"),
                   to_json(reports));
    }
    if (out.csv) {
        for (size_t i = 0; i < dims.size(); ++i) {
            CurveSample sample;
            sample.columns = {"s", "min_value"};
            const auto curve = high_d_min_curve(dims[i], grid, variant);
            const auto spts = grid.s_points();
            for (size_t k = 0; k < spts.size(); ++k) {
                sample.rows.push_back({spts[k], curve[k]});
            }
            sample.sort_rows();
            char name[64];
            std::snprintf(name, sizeof(name), "high_d_%s_min_curve_n%d.csv", tag, dims[i]);
            write_file(path_join(out.dir, name), to_csv(sample));
        }
    }
    bool all_passed = true;
    for (const auto& r : reports) {
        std::printf("high-d-%s n=%d: min %.17g at (s, x)=(%.17g, %.17g), delta %.3e, %s\n",
                    tag, r.n, r.min_value, r.argmin_s, r.argmin_x, r.refinement_delta,
                    r.passed ? "passed" : "FAILED");
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
}

int run_verify_oracle(double tol, const OutputConfig& out) {
    struct Point {
        int n;
        double s;
        double x;
    };
    const Point points[] = {
        {1, 0.60, 0.80}, {1, 0.60, 0.90}, {1, 0.85, 0.80}, {1, 0.85, 0.95},
        {2, 0.60, 0.80}, {2, 0.80, 0.85}, {3, 0.70, 0.80}, {3, 0.80, 0.90},
        {5, 0.80, 0.90},
    };
    QuadratureSpec spec;
    spec.tol = tol;
    CurveSample sample;
    sample.columns = {"n", "s", "x", "oracle", "reduced", "slack", "normalization"};
    ordered_json arr = ordered_json::array();
    bool all_passed = true;
    for (const Point& p : points) {
        const ProblemParams params{p.n, p.s};
        const double oracle = direct_qbis_oracle(params, p.x, spec);
        const double reduced =
            p.n == 1 ? one_d_expression(p.s, p.x) : lhs_qc(params, p.x);
        const double slack = oracle - reduced;
        const double normalization = qbis_oracle_normalization(params);
        const bool passed = slack >= -1e-10;
        all_passed = all_passed && passed;
        sample.rows.push_back(
            {static_cast<double>(p.n), p.s, p.x, oracle, reduced, slack, normalization});
        ordered_json entry;
        entry["n"] = p.n;
        entry["s"] = p.s;
        entry["x"] = p.x;
        entry["oracle"] = oracle;
        entry["reduced"] = reduced;
        entry["slack"] = slack;
        entry["normalization"] = normalization;
        entry["passed"] = passed;
        arr.push_back(std::move(entry));
        std::printf("oracle n=%d s=%g x=%g: oracle %.12g >= reduced %.12g (slack %.3e) %s\n",
                    p.n, p.s, p.x, oracle, reduced, slack, passed ? "passed" : "FAILED");
    }
    ensure_dir(out.dir);
    if (out.json) {
        write_file(path_join(out.dir, "oracle_report.json"), arr.dump(2) + "\n");
    }
    if (out.csv) {
        sample.sort_rows();
        write_file(path_join(out.dir, "oracle_checks.csv"), to_csv(sample));
    }
    return all_passed ? 0 : 1;
}

int run_figures(const OutputConfig& out, double s_step, double x_step) {
    ensure_dir(out.dir);
    write_file(path_join(out.dir, "xstar_curve.csv"), to_csv(x_star_curve(1e-3)));

    GridSpec one_d_grid;
    write_file(path_join(out.dir, "one_d_panels.csv"), to_csv(one_d_panels(one_d_grid)));
    write_file(path_join(out.dir, "log_case_curve.csv"), to_csv(log_case_curve(2001)));

    GridSpec heat;
    heat.s_step = s_step > 0.0 ? s_step : 0.5 / 129.0;
    heat.x_step = x_step > 0.0 ? x_step : 0.5 / 129.0;
    for (int n = 2; n <= 12; ++n) {
        char name[40];
        std::snprintf(name, sizeof(name), "heat_qc_n%d.csv", n);
        write_file(path_join(out.dir, name), to_csv(heat_grid(n, heat, CaseId::HighD_C)));
    }
    write_file(path_join(out.dir, "heat_qd_n127.csv"),
               to_csv(heat_grid(127, heat, CaseId::HighD_D)));
    std::printf("figure data written to %s\n", out.dir.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Grid-scan and quadrature verification of the radial kernel positivity "
        "conditions (certificate scans, identity suite, figure data export)"};
    app.require_subcommand(1);

    auto* identities = app.add_subcommand(
        "identities", "Run the special-function and constant multi-form identity suite");
    bool id_json = false;
    double perturb = 0.0;
    identities->add_flag("--json", id_json, "Emit the suite results as JSON on stdout");
    identities->add_option("--perturb-gamma", perturb,
                           "Multiply every explicit Gamma factor by (1 + eps); the suite "
                           "must then fail");

    auto* verify = app.add_subcommand("verify", "Run positivity scans and write reports");
    std::string case_name;
    verify->add_option("--case", case_name, "Which engine to run")
        ->required()
        ->check(CLI::IsMember({"log", "one-d", "high-d", "oracle"}));
    std::vector<int> dims;
    verify->add_option("--n", dims, "Dimensions for the high-d case")->delimiter(',');
    double s_step = 0.0;
    double x_step = 0.0;
    verify->add_option("--s-step", s_step, "s-axis step (default: case-specific)");
    verify->add_option("--x-step", x_step, "x-axis step (default: case-specific)");
    std::vector<std::string> exclude_args;
    verify->add_option("--exclude", exclude_args,
                       "s-axis exclusion center:halfwidth (repeatable)");
    double tol = 1e-9;
    verify->add_option("--tol", tol, "Quadrature tolerance for the oracle case");
    std::string verify_out = "out";
    verify->add_option("--out", verify_out, "Output directory");
    std::string verify_format = "both";
    verify->add_option("--format", verify_format, "Output formats")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    std::string condition = "c";
    verify->add_option("--condition", condition,
                       "Reduced condition for the high-d case: c (n >= 2) or d (n >= 4)")
        ->check(CLI::IsMember({"c", "d"}));

    auto* figures =
        app.add_subcommand("figures", "Export figure-parity CSV data for all cases");
    std::string figures_out = "out";
    figures->add_option("--out", figures_out, "Output directory");
    double fig_s_step = 0.0;
    double fig_x_step = 0.0;
    figures->add_option("--s-step", fig_s_step, "Heat-grid s-axis step (default 1/258)");
    figures->add_option("--x-step", fig_x_step, "Heat-grid x-axis step (default 1/258)");

    try {
        app.parse(argc, argv);

        if (identities->parsed()) {
            return run_identities(id_json, perturb);
        }

        if (figures->parsed()) {
            OutputConfig out;
            out.dir = figures_out;
            return run_figures(out, fig_s_step, fig_x_step);
        }

        OutputConfig out;
        out.dir = verify_out;
        apply_format(out, verify_format);

        if (case_name == "log") {
            return run_verify_log(out);
        }
        if (case_name == "oracle") {
            if (!(tol > 0.0)) {
                throw ConfigError("--tol must be positive");
            }
            return run_verify_oracle(tol, out);
        }

        GridSpec grid;
        if (case_name == "high-d") {
            grid.s_step = 0.5 / 513.0;
            grid.x_step = 0.5 / 513.0;
        }
        if (s_step > 0.0) {
            grid.s_step = s_step;
        }
        if (x_step > 0.0) {
            grid.x_step = x_step;
        }
        for (const auto& text : exclude_args) {
            grid.exclusions.push_back(parse_exclusion(text));
        }

        if (case_name == "one-d") {
            return run_verify_one_d(grid, out);
        }

        const CaseId variant = condition == "c" ? CaseId::HighD_C : CaseId::HighD_D;
        if (dims.empty()) {
            if (variant == CaseId::HighD_C) {
                for (int n = 2; n <= 11; ++n) {
                    dims.push_back(n);
                }
            } else {
                dims.push_back(127);
            }
        }
        return run_verify_high_d(dims, grid, variant, out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 3;
    }
}
