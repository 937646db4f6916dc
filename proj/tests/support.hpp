#pragma once

// Shared helpers for the test suites: fixture paths, temp dirs, and small
// deterministic input generators.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "gridrte/network.hpp"
#include "gridrte/rte.hpp"
#include "gridrte/sampling.hpp"

namespace testsupport {

inline std::filesystem::path fixture_path(const std::string& name) {
    return std::filesystem::path(GRIDRTE_FIXTURE_DIR) / name;
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path make_temp_dir(const std::string& tag) {
    static std::atomic<int> counter{0};
    auto dir = std::filesystem::temp_directory_path() /
               ("gridrte_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter.fetch_add(1)));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

/// Deterministic 64-bit generator for test inputs.
struct TestRng {
    std::mt19937_64 engine;
    explicit TestRng(std::uint64_t seed) : engine(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine);
    }
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine);
    }
    bool chance(double p) { return uniform(0.0, 1.0) < p; }
};

/// A small random network (towers on a handful of lines plus substations)
/// with direct failure probabilities. Component count <= max_components.
inline gridrte::Network random_network(TestRng& rng, int max_components) {
    using namespace gridrte;
    Network net;
    int remaining = std::max(2, rng.uniform_int(2, max_components));
    int n_subs = rng.uniform_int(0, remaining / 2);
    remaining -= n_subs;
    for (int i = 0; i < n_subs; ++i) {
        Substation s;
        s.id = "S" + std::to_string(i);
        s.bus_id = "B" + std::to_string(i);
        s.nominal_kv = rng.chance(0.5) ? 115.0 : 230.0;
        s.hazard.failure_probability = rng.uniform(0.0, 1.0);
        net.substations.push_back(std::move(s));
    }
    int n_lines = rng.uniform_int(1, 4);
    int tower_counter = 0;
    for (int li = 0; li < n_lines && remaining > 0; ++li) {
        TransmissionLine line;
        line.id = "L" + std::to_string(li);
        line.from_bus = "BA" + std::to_string(li);
        line.to_bus = "BB" + std::to_string(li);
        line.nominal_kv = rng.chance(0.5) ? 115.0 : 230.0;
        int towers_here = li + 1 == n_lines ? remaining : rng.uniform_int(1, remaining);
        remaining -= towers_here;
        for (int t = 0; t < towers_here; ++t) {
            Tower tower;
            tower.id = "T" + std::to_string(tower_counter++);
            tower.line_id = line.id;
            tower.nominal_kv = line.nominal_kv;
            tower.terrain_slope = rng.uniform(0.0, 90.0);
            tower.hazard.failure_probability = rng.uniform(0.0, 1.0);
            line.tower_ids.push_back(tower.id);
            net.towers.push_back(std::move(tower));
        }
        net.lines.push_back(std::move(line));
    }
    return net;
}

/// Random parameters with arbitrary multipliers and base times. Work crews
/// are filled in separately once the scenario's failure counts are known.
inline gridrte::RteParameters random_parameters(TestRng& rng) {
    using namespace gridrte;
    RteParameters p;
    p.base_outage_days[{AssetType::TransmissionTower, FailureMode::HurricaneWind}] =
        rng.uniform(1.0, 40.0);
    p.base_outage_days[{AssetType::Substation, FailureMode::Flood}] = rng.uniform(1.0, 40.0);
    double b1 = rng.uniform(5.0, 40.0);
    double b2 = b1 + rng.uniform(5.0, 40.0);
    p.loc_slope_table = {{b1, rng.uniform(0.5, 2.0)},
                         {b2, rng.uniform(0.5, 2.0)},
                         {std::nullopt, rng.uniform(0.5, 2.0)}};
    p.substation_loc = rng.uniform(0.5, 2.0);
    p.tech_kv_threshold = rng.uniform(100.0, 200.0);
    p.tech_low = rng.uniform(0.5, 2.0);
    p.tech_high = rng.uniform(0.5, 2.0);
    p.work_crews[{AssetType::TransmissionTower, FailureMode::HurricaneWind}] = 1;
    p.work_crews[{AssetType::Substation, FailureMode::Flood}] = 1;
    return p;
}

/// A scenario with independent Bernoulli(p_fail) indicators per component.
inline gridrte::Scenario random_scenario(const gridrte::Network& net, TestRng& rng,
                                         double p_fail) {
    using namespace gridrte;
    Scenario scenario;
    for (const auto& t : net.towers) {
        scenario.indicators.emplace(
            ComponentKey{AssetType::TransmissionTower, t.id, FailureMode::HurricaneWind},
            rng.chance(p_fail));
    }
    for (const auto& s : net.substations) {
        scenario.indicators.emplace(
            ComponentKey{AssetType::Substation, s.id, FailureMode::Flood}, rng.chance(p_fail));
    }
    return scenario;
}

}  // namespace testsupport
