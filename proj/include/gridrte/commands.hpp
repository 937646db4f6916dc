#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gridrte/network.hpp"
#include "gridrte/rte.hpp"
#include "gridrte/sampling.hpp"

namespace gridrte {

/// One hardening action: exactly one selector (component id, id prefix, or
/// asset type) and a probability factor in [0, 1] applied multiplicatively.
struct HardeningAction {
    std::optional<std::string> id;
    std::optional<std::string> id_prefix;
    std::optional<AssetType> asset_type;
    double factor = 1.0;
};

struct HardeningSpec {
    std::vector<HardeningAction> actions;
};

HardeningSpec load_hardening_spec(const std::filesystem::path& path);

/// Scales the selected entries' probabilities by each matching action's
/// factor (result stays in [0, 1]). Draw keys are untouched, so a hardened
/// run under the same seed reuses identical uniforms (common random
/// numbers). Throws UnresolvedSelector if an action matches nothing.
ProbabilityMap apply_hardening(const ProbabilityMap& probabilities, const HardeningSpec& spec);

struct GenerateOptions {
    std::filesystem::path network_path;
    std::uint64_t seed = 0;
    std::int64_t n_scenarios = 0;
    std::filesystem::path out_dir;
    int workers = 1;
};

struct RteOptions {
    std::filesystem::path network_path;
    std::vector<std::filesystem::path> scenario_paths;  // files or directories
    std::optional<std::filesystem::path> params_path;   // absent -> built-in defaults
    std::filesystem::path out_path;
    int workers = 1;
};

struct StatsOptions {
    std::vector<std::filesystem::path> report_paths;
    std::filesystem::path out_dir;
};

struct HardenOptions {
    std::filesystem::path network_path;
    std::filesystem::path spec_path;
    std::optional<std::filesystem::path> params_path;
    std::uint64_t seed = 0;
    std::int64_t n_scenarios = 0;
    std::filesystem::path out_dir;
    int workers = 1;
};

struct RunOptions {
    std::filesystem::path network_path;
    std::optional<std::filesystem::path> params_path;
    std::uint64_t seed = 0;
    std::int64_t n_scenarios = 0;
    std::filesystem::path out_dir;
    int workers = 1;
};

void cmd_generate(const GenerateOptions& opt);
void cmd_rte(const RteOptions& opt);
void cmd_stats(const StatsOptions& opt);
void cmd_harden(const HardenOptions& opt);
void cmd_run(const RunOptions& opt);

/// Baseline-vs-hardened comparison under common random numbers.
struct HardenDelta {
    std::int64_t scenario_index = 0;
    double baseline_days = 0.0;
    double hardened_days = 0.0;
    double delta_days = 0.0;  // baseline - hardened
};

struct HardenResult {
    std::vector<HardenDelta> per_scenario;
    double baseline_mean = 0.0;
    double hardened_mean = 0.0;
    double delta_mean = 0.0;
};

HardenResult harden_compare(const Network& network, const HardeningSpec& spec,
                            const RteParameters& params, std::uint64_t seed,
                            std::int64_t n_scenarios, int workers = 1);

/// Process exit codes: 0 success, 2 usage/validation, 3 fingerprint
/// mismatch, 4 runtime data error.
int exit_code_for(const std::exception& error);

}  // namespace gridrte
