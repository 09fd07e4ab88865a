#include "zsum/cache.hpp"

#include <fstream>

namespace zsum {

namespace {

// FNV-1a, enough for content addressing of short keys
std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
    return dir_ / (fnv1a_hex(key) + ".json");
}

std::pair<std::optional<nlohmann::json>, bool> ResultCache::get(const std::string& key) const {
    if (!enabled()) return {std::nullopt, false};
    std::ifstream in(path_for(key));
    if (!in) return {std::nullopt, false};
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || doc.value("key", "") != key ||
        doc.value("version", "") != kLibraryVersion || !doc.contains("value"))
        return {std::nullopt, true};  // corrupt or stale
    return {doc["value"], false};
}

void ResultCache::put(const std::string& key, const nlohmann::json& value) const {
    if (!enabled()) return;
    nlohmann::json doc{{"key", key}, {"version", kLibraryVersion}, {"value", value}};
    auto final_path = path_for(key);
    auto tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << doc.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, final_path);
}

}  // namespace zsum
