#include "fracverify/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include <json.hpp>

namespace fracverify {

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON has no NaN/Inf literals; reports use null for them.
ordered_json json_number(double v) {
    if (std::isnan(v) || std::isinf(v)) {
        return nullptr;
    }
    return v;
}

ordered_json grid_to_json(const GridSpec& grid) {
    ordered_json j;
    j["s_min"] = json_number(grid.s_min);
    j["s_max"] = json_number(grid.s_max);
    j["x_min"] = json_number(grid.x_min);
    j["x_max"] = json_number(grid.x_max);
    j["s_step"] = json_number(grid.s_step);
    j["x_step"] = json_number(grid.x_step);
    ordered_json ex = ordered_json::array();
    for (const auto& [center, halfwidth] : grid.exclusions) {
        ex.push_back({{"center", center}, {"halfwidth", halfwidth}});
    }
    j["exclusions"] = std::move(ex);
    return j;
}

ordered_json report_to_json(const ScanReport& report) {
    ordered_json j;
    j["case_id"] = to_string(report.case_id);
    ordered_json params;
    params["n"] = report.n;
    params["s"] = json_number(report.s);
    params["a"] = json_number(report.a);
    params["b"] = json_number(report.b);
    j["params"] = std::move(params);
    j["grid"] = grid_to_json(report.grid);
    j["min_value"] = json_number(report.min_value);
    ordered_json argmin;
    argmin["s"] = json_number(report.argmin_s);
    argmin["x"] = json_number(report.argmin_x);
    j["argmin"] = std::move(argmin);
    j["passed"] = report.passed;
    j["points_evaluated"] = report.points_evaluated;
    j["refinement_delta"] = json_number(report.refinement_delta);
    j["clamped_points"] = report.clamped_points;
    j["oracle_normalization"] = json_number(report.oracle_normalization);
    j["notes"] = report.notes;
    return j;
}

}  // namespace

void CurveSample::sort_rows() {
    std::sort(rows.begin(), rows.end());
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string to_csv(const CurveSample& sample) {
    std::string out;
    for (size_t i = 0; i < sample.columns.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += sample.columns[i];
    }
    out += '\n';
    for (const auto& row : sample.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const ScanReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string to_json(const std::vector<ScanReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& report : reports) {
        arr.push_back(report_to_json(report));
    }
    return arr.dump(2) + "\n";
}

std::string to_json(const std::vector<IdentityResult>& results) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
        ordered_json j;
        j["name"] = r.name;
        j["max_rel_err"] = json_number(r.max_rel_err);
        j["tolerance"] = json_number(r.tolerance);
        j["points"] = r.points;
        j["passed"] = r.passed;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open output file: " + path);
    }
    out << content;
    if (!out) {
        throw ConfigError("failed writing output file: " + path);
    }
}

}  // namespace fracverify
