#include "susyces/report.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"

namespace susyces {

CheckReport make_report(std::string name, double max_error, double tolerance, std::string details)
{
    CheckReport r{std::move(name), false, max_error, tolerance, std::move(details)};
    r.passed = std::isfinite(max_error) && max_error <= tolerance;
    return r;
}

void retolerance(CheckReport& r, double tolerance)
{
    r.tolerance = tolerance;
    r.passed = std::isfinite(r.max_error) && r.max_error <= tolerance;
}

std::string to_json(const std::vector<CheckReport>& reports)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json o;
        o["name"] = r.name;
        o["passed"] = r.passed;
        // JSON has no infinities; a non-finite error is reported as null.
        if (std::isfinite(r.max_error)) {
            o["max_error"] = r.max_error;
        } else {
            o["max_error"] = nullptr;
        }
        o["tolerance"] = r.tolerance;
        o["details"] = r.details;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::vector<CheckReport> reports_from_json(const std::string& text)
{
    std::vector<CheckReport> out;
    for (const auto& o : nlohmann::json::parse(text)) {
        CheckReport r;
        r.name = o.at("name").get<std::string>();
        r.passed = o.at("passed").get<bool>();
        r.max_error = o.at("max_error").is_null() ? std::numeric_limits<double>::infinity()
                                                  : o.at("max_error").get<double>();
        r.tolerance = o.at("tolerance").get<double>();
        r.details = o.at("details").get<std::string>();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace susyces
