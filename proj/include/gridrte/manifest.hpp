#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace gridrte {

/// Run provenance written alongside every command's outputs. Fingerprints
/// tie artifacts to the exact inputs that produced them; created_utc is
/// informational and excluded from byte-identity comparisons.
struct RunManifest {
    std::string network_fingerprint;
    std::optional<std::string> params_fingerprint;
    std::optional<std::uint64_t> master_seed;  // absent for purely derived outputs (stats)
    std::int64_t n_scenarios = 0;
    std::string tool_version;
    std::string created_utc;
};

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);
RunManifest read_manifest(const std::filesystem::path& path);

std::string current_utc_timestamp();

}  // namespace gridrte
