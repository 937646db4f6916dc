#include "gridrte/commands.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <mutex>
#include <set>
#include <thread>

#include "gridrte/fingerprint.hpp"
#include "gridrte/manifest.hpp"
#include "gridrte/network_io.hpp"
#include "gridrte/params_io.hpp"
#include "gridrte/report_io.hpp"
#include "gridrte/scenario_io.hpp"
#include "gridrte/stats.hpp"
#include "gridrte/text.hpp"
#include "gridrte/version.hpp"

#include "json.hpp"

namespace gridrte {

namespace {

RteParameters load_params_or_default(const std::optional<std::filesystem::path>& path) {
    if (path) {
        return load_parameters(*path);
    }
    return default_parameters();
}

void require_n_scenarios(std::int64_t n) {
    if (n < 1) {
        throw UsageError("scenario count must be >= 1, got " + std::to_string(n));
    }
}

/// Directories expand to the scenario_*.csv files inside them, sorted by
/// name so the ensemble order is stable.
std::vector<std::filesystem::path> expand_scenario_paths(
    const std::vector<std::filesystem::path>& paths) {
    std::vector<std::filesystem::path> files;
    for (const auto& p : paths) {
        if (std::filesystem::is_directory(p)) {
            std::vector<std::filesystem::path> found;
            for (const auto& entry : std::filesystem::directory_iterator(p)) {
                const std::string name = entry.path().filename().string();
                if (entry.is_regular_file() && name.starts_with("scenario_") &&
                    name.ends_with(".csv")) {
                    found.push_back(entry.path());
                }
            }
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.push_back(p);
        }
    }
    if (files.empty()) {
        throw UsageError("no scenario files given");
    }
    return files;
}

/// Per-scenario reports, computed across workers. Output order and content
/// are independent of worker count.
std::vector<RteReport> compute_reports(const Network& network,
                                       const std::vector<Scenario>& scenarios,
                                       const RteParameters& params, const std::string& net_fp,
                                       const std::string& par_fp, int workers) {
    std::vector<RteReport> reports(scenarios.size());
    auto compute_one = [&](std::size_t i) {
        reports[i] = scenario_rte(network, scenarios[i], params);
        reports[i].network_fingerprint = net_fp;
        reports[i].params_fingerprint = par_fp;
    };
    if (workers <= 1 || scenarios.size() <= 1) {
        for (std::size_t i = 0; i < scenarios.size(); ++i) {
            compute_one(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            try {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= scenarios.size()) {
                        break;
                    }
                    compute_one(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(scenarios.size());
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (auto& t : pool) {
            t.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    // Crew clamps are applied silently; surface each distinct one once.
    std::set<std::string> notices;
    for (const RteReport& r : reports) {
        for (const CrewClamp& c : r.crew_clamps) {
            notices.insert("notice: work crews for (" + std::string(to_string(c.asset_type)) +
                           ", " + std::string(to_string(c.failure_mode)) + ") reduced from " +
                           std::to_string(c.requested) + " to concurrent failure count " +
                           std::to_string(c.used));
        }
    }
    for (const std::string& n : notices) {
        std::cerr << n << "\n";
    }
    return reports;
}

void write_stats_outputs(const std::vector<RteReport>& reports,
                         const std::filesystem::path& out_dir) {
    EnsembleSummary summary = aggregate(reports);
    write_text_file(out_dir / "summary.csv", summary_csv_text(summary));
    write_text_file(out_dir / "line_box_stats.csv",
                    box_stats_csv_text(per_line_distribution(reports)));
}

}  // namespace

HardeningSpec load_hardening_spec(const std::filesystem::path& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("actions") || !doc.at("actions").is_array() ||
        doc.at("actions").empty()) {
        throw ParseError(path.string() + ": expected an object with a non-empty 'actions' array");
    }
    HardeningSpec spec;
    std::size_t idx = 0;
    for (const nlohmann::json& entry : doc.at("actions")) {
        std::string where = path.string() + ": actions[" + std::to_string(idx++) + "]";
        HardeningAction action;
        int selectors = 0;
        auto string_field = [&](const char* field) {
            if (!entry.at(field).is_string()) {
                throw ParseError(where + ": '" + field + "' must be a string");
            }
            return entry.at(field).get<std::string>();
        };
        if (entry.contains("id")) {
            action.id = string_field("id");
            ++selectors;
        }
        if (entry.contains("id_prefix")) {
            action.id_prefix = string_field("id_prefix");
            ++selectors;
        }
        if (entry.contains("asset_type")) {
            std::string name = string_field("asset_type");
            auto a = asset_type_from_string(name);
            if (!a) {
                throw ParseError(where + ": unknown asset_type '" + name + "'");
            }
            action.asset_type = *a;
            ++selectors;
        }
        if (selectors != 1) {
            throw ParseError(where +
                             ": exactly one of 'id', 'id_prefix', 'asset_type' must be given");
        }
        if (!entry.contains("factor") || !entry.at("factor").is_number()) {
            throw ParseError(where + ": missing or non-numeric 'factor'");
        }
        action.factor = entry.at("factor").get<double>();
        if (!(action.factor >= 0.0 && action.factor <= 1.0)) {
            throw ParseError(where + ": factor must be in [0,1], got " +
                             format_double(action.factor));
        }
        spec.actions.push_back(std::move(action));
    }
    return spec;
}

ProbabilityMap apply_hardening(const ProbabilityMap& probabilities, const HardeningSpec& spec) {
    ProbabilityMap hardened = probabilities;
    for (std::size_t i = 0; i < spec.actions.size(); ++i) {
        const HardeningAction& action = spec.actions[i];
        auto matches = [&](const ComponentKey& key) {
            if (action.id) {
                return key.component_id == *action.id;
            }
            if (action.id_prefix) {
                return key.component_id.starts_with(*action.id_prefix);
            }
            return key.asset_type == *action.asset_type;
        };
        std::size_t matched = 0;
        for (auto& [key, p] : hardened) {
            if (matches(key)) {
                p = std::clamp(p * action.factor, 0.0, 1.0);
                ++matched;
            }
        }
        if (matched == 0) {
            std::string selector = action.id ? "id '" + *action.id + "'"
                                 : action.id_prefix
                                     ? "id_prefix '" + *action.id_prefix + "'"
                                     : "asset_type '" +
                                           std::string(to_string(*action.asset_type)) + "'";
            throw UnresolvedSelector("hardening action " + std::to_string(i) + " (" + selector +
                                     ") matches no component");
        }
    }
    return hardened;
}

void cmd_generate(const GenerateOptions& opt) {
    require_n_scenarios(opt.n_scenarios);
    Network network = load_network(opt.network_path);
    std::string net_fp = network_fingerprint(network);
    ProbabilityMap probabilities = component_failure_probabilities(network);
    std::vector<Scenario> scenarios =
        sample_ensemble(probabilities, opt.seed, opt.n_scenarios, opt.workers);

    for (const Scenario& scenario : scenarios) {
        write_scenario(scenario, net_fp, opt.out_dir / scenario_file_name(scenario.scenario_index));
    }

    RunManifest manifest;
    manifest.network_fingerprint = net_fp;
    manifest.master_seed = opt.seed;
    manifest.n_scenarios = opt.n_scenarios;
    manifest.tool_version = kToolVersion;
    manifest.created_utc = current_utc_timestamp();
    write_manifest(manifest, opt.out_dir / "manifest.json");
}

void cmd_rte(const RteOptions& opt) {
    Network network = load_network(opt.network_path);
    RteParameters params = load_params_or_default(opt.params_path);
    std::string net_fp = network_fingerprint(network);
    std::string par_fp = parameters_fingerprint(params);

    std::vector<Scenario> scenarios;
    std::set<std::int64_t> seen_indices;
    for (const auto& file : expand_scenario_paths(opt.scenario_paths)) {
        ScenarioFile loaded = read_scenario(file);
        if (loaded.network_fingerprint != net_fp) {
            throw FingerprintMismatch(file.string() + " was generated from network " +
                                      loaded.network_fingerprint + ", not " + net_fp);
        }
        if (!seen_indices.insert(loaded.scenario.scenario_index).second) {
            throw UsageError(file.string() + " repeats scenario index " +
                             std::to_string(loaded.scenario.scenario_index));
        }
        scenarios.push_back(std::move(loaded.scenario));
    }

    std::vector<RteReport> reports =
        compute_reports(network, scenarios, params, net_fp, par_fp, opt.workers);
    write_reports(reports, net_fp, par_fp, opt.out_path);

    RunManifest manifest;
    manifest.network_fingerprint = net_fp;
    manifest.params_fingerprint = par_fp;
    manifest.master_seed = scenarios.front().master_seed;
    manifest.n_scenarios = static_cast<std::int64_t>(scenarios.size());
    manifest.tool_version = kToolVersion;
    manifest.created_utc = current_utc_timestamp();
    write_manifest(manifest, opt.out_path.parent_path() / "manifest.json");
}

void cmd_stats(const StatsOptions& opt) {
    if (opt.report_paths.empty()) {
        throw UsageError("no report files given");
    }
    std::vector<RteReport> reports;
    for (const auto& path : opt.report_paths) {
        std::vector<RteReport> batch = read_reports(path);
        reports.insert(reports.end(), std::make_move_iterator(batch.begin()),
                       std::make_move_iterator(batch.end()));
    }
    // aggregate() itself rejects mismatched fingerprints.
    write_stats_outputs(reports, opt.out_dir);

    RunManifest manifest;
    if (!reports.empty()) {
        manifest.network_fingerprint = reports.front().network_fingerprint;
        manifest.params_fingerprint = reports.front().params_fingerprint;
    }
    manifest.n_scenarios = static_cast<std::int64_t>(reports.size());
    manifest.tool_version = kToolVersion;
    manifest.created_utc = current_utc_timestamp();
    write_manifest(manifest, opt.out_dir / "manifest.json");
}

HardenResult harden_compare(const Network& network, const HardeningSpec& spec,
                            const RteParameters& params, std::uint64_t seed,
                            std::int64_t n_scenarios, int workers) {
    require_n_scenarios(n_scenarios);
    ProbabilityMap baseline_p = component_failure_probabilities(network);
    ProbabilityMap hardened_p = apply_hardening(baseline_p, spec);

    // Same seed and index stream on both sides: common random numbers make
    // the comparison deterministic per scenario, not just in expectation.
    std::vector<Scenario> baseline = sample_ensemble(baseline_p, seed, n_scenarios, workers);
    std::vector<Scenario> hardened = sample_ensemble(hardened_p, seed, n_scenarios, workers);

    std::string net_fp = network_fingerprint(network);
    std::string par_fp = parameters_fingerprint(params);
    std::vector<RteReport> baseline_r =
        compute_reports(network, baseline, params, net_fp, par_fp, workers);
    std::vector<RteReport> hardened_r =
        compute_reports(network, hardened, params, net_fp, par_fp, workers);

    HardenResult result;
    double base_sum = 0.0;
    double hard_sum = 0.0;
    for (std::size_t i = 0; i < baseline_r.size(); ++i) {
        HardenDelta d;
        d.scenario_index = baseline_r[i].scenario_index;
        d.baseline_days = baseline_r[i].total;
        d.hardened_days = hardened_r[i].total;
        d.delta_days = d.baseline_days - d.hardened_days;
        base_sum += d.baseline_days;
        hard_sum += d.hardened_days;
        result.per_scenario.push_back(d);
    }
    double n = static_cast<double>(baseline_r.size());
    result.baseline_mean = base_sum / n;
    result.hardened_mean = hard_sum / n;
    result.delta_mean = result.baseline_mean - result.hardened_mean;
    return result;
}

void cmd_harden(const HardenOptions& opt) {
    require_n_scenarios(opt.n_scenarios);
    Network network = load_network(opt.network_path);
    RteParameters params = load_params_or_default(opt.params_path);
    HardeningSpec spec = load_hardening_spec(opt.spec_path);

    HardenResult result =
        harden_compare(network, spec, params, opt.seed, opt.n_scenarios, opt.workers);

    std::string out = "scenario_index,baseline_days,hardened_days,delta_days\n";
    for (const HardenDelta& d : result.per_scenario) {
        out += std::to_string(d.scenario_index);
        out += ',';
        out += format_double(d.baseline_days);
        out += ',';
        out += format_double(d.hardened_days);
        out += ',';
        out += format_double(d.delta_days);
        out += '\n';
    }
    out += "mean,";
    out += format_double(result.baseline_mean);
    out += ',';
    out += format_double(result.hardened_mean);
    out += ',';
    out += format_double(result.delta_mean);
    out += '\n';
    write_text_file(opt.out_dir / "harden_deltas.csv", out);

    RunManifest manifest;
    manifest.network_fingerprint = network_fingerprint(network);
    manifest.params_fingerprint = parameters_fingerprint(params);
    manifest.master_seed = opt.seed;
    manifest.n_scenarios = opt.n_scenarios;
    manifest.tool_version = kToolVersion;
    manifest.created_utc = current_utc_timestamp();
    write_manifest(manifest, opt.out_dir / "manifest.json");
}

void cmd_run(const RunOptions& opt) {
    require_n_scenarios(opt.n_scenarios);
    Network network = load_network(opt.network_path);
    RteParameters params = load_params_or_default(opt.params_path);
    std::string net_fp = network_fingerprint(network);
    std::string par_fp = parameters_fingerprint(params);

    ProbabilityMap probabilities = component_failure_probabilities(network);
    std::vector<Scenario> scenarios =
        sample_ensemble(probabilities, opt.seed, opt.n_scenarios, opt.workers);
    for (const Scenario& scenario : scenarios) {
        write_scenario(scenario, net_fp,
                       opt.out_dir / "scenarios" / scenario_file_name(scenario.scenario_index));
    }

    std::vector<RteReport> reports =
        compute_reports(network, scenarios, params, net_fp, par_fp, opt.workers);
    write_reports(reports, net_fp, par_fp, opt.out_dir / "reports.csv");
    write_stats_outputs(reports, opt.out_dir);

    RunManifest manifest;
    manifest.network_fingerprint = net_fp;
    manifest.params_fingerprint = par_fp;
    manifest.master_seed = opt.seed;
    manifest.n_scenarios = opt.n_scenarios;
    manifest.tool_version = kToolVersion;
    manifest.created_utc = current_utc_timestamp();
    write_manifest(manifest, opt.out_dir / "manifest.json");
}

int exit_code_for(const std::exception& error) {
    if (dynamic_cast<const FingerprintMismatch*>(&error) != nullptr) {
        return 3;
    }
    if (dynamic_cast<const UsageError*>(&error) != nullptr ||
        dynamic_cast<const ParseError*>(&error) != nullptr ||
        dynamic_cast<const ValidationError*>(&error) != nullptr ||
        dynamic_cast<const UnresolvedSelector*>(&error) != nullptr) {
        return 2;
    }
    return 4;
}

}  // namespace gridrte
