#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gridrte/sampling.hpp"

namespace gridrte {

/// Scenario files: `asset_type,component_id,failure_mode,failed` rows in
/// key order, plus a sidecar `<name>.meta.json` recording master_seed,
/// scenario_index, and the network fingerprint.
struct ScenarioFile {
    Scenario scenario;
    std::string network_fingerprint;
};

std::string scenario_csv_text(const Scenario& scenario);

void write_scenario(const Scenario& scenario, const std::string& network_fp,
                    const std::filesystem::path& csv_path);
ScenarioFile read_scenario(const std::filesystem::path& csv_path);

/// scenario_00000.csv, scenario_00001.csv, ...
std::filesystem::path scenario_file_name(std::int64_t scenario_index);
std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

}  // namespace gridrte
