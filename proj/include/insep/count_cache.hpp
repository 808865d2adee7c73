#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "insep/enumeration.hpp"

namespace insep {

inline constexpr int kCacheSchemaVersion = 1;
inline constexpr const char* kCacheDirEnv = "INSEP_CACHE_DIR";

/// One JSON document per n holding the canonical representations and their
/// stabilizer orders. Documents with another schema version are ignored.
class CountCache {
public:
    explicit CountCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// INSEP_CACHE_DIR wins over the command-line value.
    static std::optional<std::filesystem::path> resolve_dir(const std::optional<std::string>& flag);

    std::filesystem::path file_for(int n) const;
    std::optional<std::vector<EnumerationRecord>> load(int n) const;
    void store(int n, std::span<const EnumerationRecord> records) const;

private:
    std::filesystem::path dir_;
};

/// enumerate_inseparable() through an optional cache.
std::vector<EnumerationRecord> enumerate_cached(int n, int jobs, const CountCache* cache);

}  // namespace insep
