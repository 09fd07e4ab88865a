#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace zsum {

inline constexpr const char* kLibraryVersion = "1.0.0";

// Content-addressed JSON result cache.  Entries carry the full key and the
// library version; anything that fails to verify is treated as a miss so the
// caller recomputes and overwrites.
class ResultCache {
public:
    ResultCache() = default;  // disabled
    explicit ResultCache(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }
    // second flag is true when a file existed but was corrupt/stale
    std::pair<std::optional<nlohmann::json>, bool> get(const std::string& key) const;
    void put(const std::string& key, const nlohmann::json& value) const;

private:
    std::filesystem::path path_for(const std::string& key) const;
    std::filesystem::path dir_;
};

}  // namespace zsum
