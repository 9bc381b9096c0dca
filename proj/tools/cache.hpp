#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "spets/characters.hpp"

namespace spets::app {

inline constexpr int kCacheVersion = 1;

std::uint64_t fnv1a64(const std::string& text);

/// On-disk store of JSON artifacts, one file per (kind, key).
class Cache {
  public:
    /// Empty dir disables the cache.
    explicit Cache(std::string dir = {}, int version = kCacheVersion);

    bool enabled() const { return !dir_.empty(); }
    const std::string& dir() const { return dir_; }
    std::string path_for(const std::string& kind, const std::string& key) const;

    /// Payload stored under (kind, key). Corrupt files are removed with a
    /// warning on stderr; files from another cache version are ignored.
    std::optional<nlohmann::json> load(const std::string& kind, const std::string& key) const;
    /// Atomic write: temp file then rename.
    void store(const std::string& kind, const std::string& key, const nlohmann::json& payload) const;

    int hits() const { return hits_; }
    int misses() const { return misses_; }

  private:
    std::string dir_;
    int version_;
    mutable int hits_ = 0;
    mutable int misses_ = 0;
};

nlohmann::json chartable_to_json(const CharTable& table);
/// Rebuilds a table for g; throws DomainError if the payload does not fit g.
CharTable chartable_from_json(std::shared_ptr<const Group> g, const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix<CycNumber>& m);
Matrix<CycNumber> matrix_from_json(const nlohmann::json& j);

}  // namespace spets::app
