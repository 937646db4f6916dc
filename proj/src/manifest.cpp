#include "gridrte/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

#include "gridrte/errors.hpp"
#include "gridrte/text.hpp"

#include "json.hpp"

namespace gridrte {

std::string current_utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
    nlohmann::json doc = {
        {"network_fingerprint", manifest.network_fingerprint},
        {"n_scenarios", manifest.n_scenarios},
        {"tool_version", manifest.tool_version},
        {"created_utc", manifest.created_utc},
    };
    if (manifest.master_seed) {
        doc["master_seed"] = *manifest.master_seed;
    }
    if (manifest.params_fingerprint) {
        doc["params_fingerprint"] = *manifest.params_fingerprint;
    }
    write_text_file(path, doc.dump(1) + "\n");
}

RunManifest read_manifest(const std::filesystem::path& path) {
    RunManifest manifest;
    try {
        nlohmann::json doc = nlohmann::json::parse(read_text_file(path));
        manifest.network_fingerprint = doc.at("network_fingerprint").get<std::string>();
        if (doc.contains("master_seed")) {
            manifest.master_seed = doc.at("master_seed").get<std::uint64_t>();
        }
        manifest.n_scenarios = doc.at("n_scenarios").get<std::int64_t>();
        manifest.tool_version = doc.at("tool_version").get<std::string>();
        manifest.created_utc = doc.at("created_utc").get<std::string>();
        if (doc.contains("params_fingerprint")) {
            manifest.params_fingerprint = doc.at("params_fingerprint").get<std::string>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return manifest;
}

}  // namespace gridrte
