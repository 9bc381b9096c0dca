#include "cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace spets::app {

using nlohmann::json;
namespace fs = std::filesystem;

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Cache::Cache(std::string dir, int version) : dir_(std::move(dir)), version_(version) {}

std::string Cache::path_for(const std::string& kind, const std::string& key) const {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(kind + "\n" + key)));
    return (fs::path(dir_) / (kind + "-" + hex + ".json")).string();
}

std::optional<json> Cache::load(const std::string& kind, const std::string& key) const {
    if (!enabled()) return std::nullopt;
    const std::string path = path_for(kind, key);
    std::ifstream in(path);
    if (!in) {
        ++misses_;
        return std::nullopt;
    }
    json j;
    try {
        in >> j;
        if (!j.is_object() || !j.contains("cache_version") || !j.contains("payload")) throw std::runtime_error("missing fields");
    } catch (const std::exception& ex) {
        std::cerr << "warning: discarding corrupt cache entry " << path << ": " << ex.what() << "\n";
        in.close();
        std::error_code ec;
        fs::remove(path, ec);
        ++misses_;
        return std::nullopt;
    }
    if (j.at("cache_version") != version_ || j.value("kind", std::string()) != kind || j.value("key", std::string()) != key) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return j.at("payload");
}

void Cache::store(const std::string& kind, const std::string& key, const json& payload) const {
    if (!enabled()) return;
    fs::create_directories(dir_);
    const std::string path = path_for(kind, key);
    json j{{"cache_version", version_}, {"kind", kind}, {"key", key}, {"payload", payload}};
    std::random_device rd;
    const std::string tmp = path + ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
        out << j.dump() << "\n";
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    }
    fs::rename(tmp, path);
}

json matrix_to_json(const Matrix<CycNumber>& m) {
    json rows = json::array();
    for (const auto& r : m) {
        json row = json::array();
        for (const auto& x : r) row.push_back(x.str());
        rows.push_back(row);
    }
    return rows;
}

Matrix<CycNumber> matrix_from_json(const json& j) {
    Matrix<CycNumber> m;
    for (const auto& r : j) {
        Vec<CycNumber> row;
        for (const auto& x : r) row.push_back(CycNumber::parse(x.get<std::string>()));
        m.push_back(std::move(row));
    }
    return m;
}

json chartable_to_json(const CharTable& table) {
    const Group& g = table.group();
    json classes = json::array();
    for (int c = 0; c < g.class_count(); ++c) classes.push_back(g.class_name(c));
    json irrs = json::array();
    for (int i = 0; i < table.size(); ++i) {
        const IrrInfo& info = table.info()[i];
        json values = json::array();
        for (const auto& v : table.irr(i)) values.push_back(v.str());
        irrs.push_back(json{{"label", info.label},
                            {"lambda", info.lambda},
                            {"split_index", info.split_index},
                            {"split_count", info.split_count},
                            {"values", values}});
    }
    return json{{"group", g.spec().str()}, {"classes", classes}, {"irrs", irrs}};
}

CharTable chartable_from_json(std::shared_ptr<const Group> g, const json& j) {
    try {
        if (j.at("group").get<std::string>() != g->spec().str()) throw DomainError("cached table is for another group");
        const auto& classes = j.at("classes");
        if (static_cast<int>(classes.size()) != g->class_count()) throw DomainError("cached table has the wrong class count");
        for (int c = 0; c < g->class_count(); ++c)
            if (classes[c].get<std::string>() != g->class_name(c)) throw DomainError("cached table has a different class order");
        std::vector<IrrInfo> info;
        std::vector<ClassFunction> irrs;
        for (const auto& r : j.at("irrs")) {
            IrrInfo x;
            x.label = r.at("label").get<std::string>();
            x.lambda = r.at("lambda").get<MultiPartition>();
            x.split_index = r.at("split_index").get<int>();
            x.split_count = r.at("split_count").get<int>();
            ClassFunction f;
            for (const auto& v : r.at("values")) f.push_back(CycNumber::parse(v.get<std::string>()));
            if (static_cast<int>(f.size()) != g->class_count()) throw DomainError("cached character has the wrong length");
            info.push_back(std::move(x));
            irrs.push_back(std::move(f));
        }
        return CharTable(std::move(g), std::move(info), std::move(irrs));
    } catch (const json::exception& ex) {
        throw DomainError(std::string("malformed cached character table: ") + ex.what());
    }
}

}  // namespace spets::app
