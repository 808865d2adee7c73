#include "insep/count_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "insep/errors.hpp"
#include "insep/text_format.hpp"

namespace insep {

std::optional<std::filesystem::path> CountCache::resolve_dir(const std::optional<std::string>& flag) {
    if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') return std::filesystem::path(env);
    if (flag && !flag->empty()) return std::filesystem::path(*flag);
    return std::nullopt;
}

std::filesystem::path CountCache::file_for(int n) const { return dir_ / ("n" + std::to_string(n) + ".json"); }

std::optional<std::vector<EnumerationRecord>> CountCache::load(int n) const {
    std::ifstream in(file_for(n));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        const auto doc = nlohmann::json::parse(buf.str());
        if (doc.at("schema").get<int>() != kCacheSchemaVersion || doc.at("n").get<int>() != n) return std::nullopt;
        std::vector<EnumerationRecord> out;
        for (const auto& item : doc.at("records")) {
            EnumerationRecord r;
            r.theta = parse_theta(item.at("theta").get<std::string>());
            r.g = item.at("g").get<int>();
            r.type = metrics(r.theta).type;
            r.n = n;
            if (r.theta.n() != n) return std::nullopt;
            out.push_back(std::move(r));
        }
        return out;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    } catch (const Error&) {
        return std::nullopt;
    }
}

void CountCache::store(int n, std::span<const EnumerationRecord> records) const {
    nlohmann::json doc;
    doc["schema"] = kCacheSchemaVersion;
    doc["n"] = n;
    doc["records"] = nlohmann::json::array();
    for (const auto& r : records) doc["records"].push_back({{"theta", format_theta(r.theta)}, {"g", r.g}});

    std::filesystem::create_directories(dir_);
    const auto target = file_for(n);
    const auto tmp = std::filesystem::path(target).concat(".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw ValidationError("cannot write cache file " + tmp.string());
        out << doc.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, target);
}

std::vector<EnumerationRecord> enumerate_cached(int n, int jobs, const CountCache* cache) {
    if (cache != nullptr) {
        if (auto hit = cache->load(n)) return std::move(*hit);
    }
    EnumerationOptions opt;
    opt.jobs = jobs;
    auto records = enumerate_inseparable(n, opt);
    if (cache != nullptr) cache->store(n, records);
    return records;
}

}  // namespace insep
