#pragma once

#include <string>
#include <vector>

namespace susyces {

/// Outcome of one verification check. passed == (max_error <= tolerance).
struct CheckReport {
    std::string name;
    bool passed = false;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::string details;
};

[[nodiscard]] CheckReport make_report(std::string name, double max_error, double tolerance, std::string details = {});

/// Replaces the tolerance and recomputes `passed`.
void retolerance(CheckReport& r, double tolerance);

/// JSON array of flat objects {name, passed, max_error, tolerance, details}.
[[nodiscard]] std::string to_json(const std::vector<CheckReport>& reports);
[[nodiscard]] std::vector<CheckReport> reports_from_json(const std::string& text);

}  // namespace susyces
