#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace spets::app {

inline constexpr const char* kReportSchema = "spets-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

struct Check {
    std::string name;
    std::string status;  // "pass", "fail" or "skipped"
    nlohmann::json witness = nlohmann::json::object();
};

struct Report {
    nlohmann::json config = nlohmann::json::object();
    nlohmann::json group = nlohmann::json::object();
    std::vector<Check> checks;
    nlohmann::json data = nlohmann::json::object();
    nlohmann::json timing = nlohmann::json::object();

    void add(std::string name, bool passed, nlohmann::json witness = nlohmann::json::object());
    void skip(std::string name, const std::string& reason);
    bool failed() const;
    /// 0 when nothing failed, 1 otherwise.
    int exit_code() const { return failed() ? 1 : 0; }

    nlohmann::json to_json() const;
    /// JSON without the timing block, for determinism comparisons.
    nlohmann::json stable_json() const;
    /// "json", "csv" or "markdown".
    std::string render(const std::string& format) const;
};

/// A two-dimensional table stored under data["table"].
nlohmann::json make_table(std::vector<std::string> columns, std::vector<std::vector<std::string>> rows);

}  // namespace spets::app
