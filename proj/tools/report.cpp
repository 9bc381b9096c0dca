#include "report.hpp"

#include <sstream>
#include <stdexcept>

namespace spets::app {

using nlohmann::json;

void Report::add(std::string name, bool passed, json witness) {
    checks.push_back(Check{std::move(name), passed ? "pass" : "fail", std::move(witness)});
}

void Report::skip(std::string name, const std::string& reason) {
    checks.push_back(Check{std::move(name), "skipped", json{{"reason", reason}}});
}

bool Report::failed() const {
    for (const auto& c : checks)
        if (c.status == "fail") return true;
    return false;
}

json Report::stable_json() const {
    json j;
    j["schema"] = kReportSchema;
    j["tool_version"] = kToolVersion;
    j["config"] = config;
    j["group"] = group;
    json cs = json::array();
    for (const auto& c : checks) cs.push_back(json{{"name", c.name}, {"status", c.status}, {"witness", c.witness}});
    j["checks"] = cs;
    j["data"] = data;
    return j;
}

json Report::to_json() const {
    json j = stable_json();
    j["timing"] = timing;
    return j;
}

json make_table(std::vector<std::string> columns, std::vector<std::vector<std::string>> rows) {
    return json{{"columns", std::move(columns)}, {"rows", std::move(rows)}};
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_field(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string witness_text(const json& w) { return w.empty() ? "" : w.dump(); }

}  // namespace

std::string Report::render(const std::string& format) const {
    std::ostringstream out;
    if (format == "json") {
        out << to_json().dump(2) << "\n";
        return out.str();
    }
    const json* table = data.contains("table") ? &data.at("table") : nullptr;
    if (format == "csv") {
        out << "check,status,witness\n";
        for (const auto& c : checks) out << csv_field(c.name) << "," << c.status << "," << csv_field(witness_text(c.witness)) << "\n";
        if (table) {
            out << "\n";
            bool first = true;
            for (const auto& col : table->at("columns")) {
                out << (first ? "" : ",") << csv_field(col.get<std::string>());
                first = false;
            }
            out << "\n";
            for (const auto& row : table->at("rows")) {
                first = true;
                for (const auto& x : row) {
                    out << (first ? "" : ",") << csv_field(x.get<std::string>());
                    first = false;
                }
                out << "\n";
            }
        }
        return out.str();
    }
    if (format == "markdown") {
        out << "## " << config.value("command", std::string("report"));
        if (group.contains("spec")) out << " " << group.at("spec").get<std::string>();
        out << "\n\n";
        if (!checks.empty()) {
            out << "| check | status | witness |\n|---|---|---|\n";
            for (const auto& c : checks) out << "| " << md_field(c.name) << " | " << c.status << " | " << md_field(witness_text(c.witness)) << " |\n";
            out << "\n";
        }
        if (table) {
            out << "|";
            for (const auto& col : table->at("columns")) out << " " << md_field(col.get<std::string>()) << " |";
            out << "\n|";
            for (std::size_t i = 0; i < table->at("columns").size(); ++i) out << "---|";
            out << "\n";
            for (const auto& row : table->at("rows")) {
                out << "|";
                for (const auto& x : row) out << " " << md_field(x.get<std::string>()) << " |";
                out << "\n";
            }
        }
        return out.str();
    }
    throw std::invalid_argument("unknown format " + format + " (expected json, csv or markdown)");
}

}  // namespace spets::app
