#ifndef FRACVERIFY_REPORT_HPP
#define FRACVERIFY_REPORT_HPP

#include <string>
#include <vector>

#include "fracverify/identities.hpp"
#include "fracverify/verifier.hpp"

namespace fracverify {

// Tabular figure data: named columns and numeric rows. Rows are kept
// sorted lexicographically so emitted files are byte-stable across runs.
struct CurveSample {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void sort_rows();
};

// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

// CSV with a header row, LF line endings, round-trip float formatting.
std::string to_csv(const CurveSample& sample);

// JSON serializations (2-space indent, keys in fixed order, LF endings).
std::string to_json(const ScanReport& report);
std::string to_json(const std::vector<ScanReport>& reports);
std::string to_json(const std::vector<IdentityResult>& results);

void write_file(const std::string& path, const std::string& content);

}  // namespace fracverify

#endif
