#include "gridrte/sampling.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "gridrte/errors.hpp"
#include "gridrte/text.hpp"

namespace gridrte {

std::uint64_t component_key_hash(const ComponentKey& key) {
    std::string bytes;
    bytes += to_string(key.asset_type);
    bytes += '\x1f';
    bytes += key.component_id;
    bytes += '\x1f';
    bytes += to_string(key.failure_mode);
    return fnv1a64(bytes);
}

double uniform_draw(std::uint64_t master_seed, std::int64_t scenario_index,
                    const ComponentKey& key) {
    std::uint64_t z = mix64(master_seed);
    z = mix64(z ^ static_cast<std::uint64_t>(scenario_index));
    z = mix64(z ^ component_key_hash(key));
    // Top 53 bits -> [0, 1) with full double resolution.
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

ProbabilityMap component_failure_probabilities(const Network& network) {
    ProbabilityMap out;
    auto resolve = [&](const HazardInput& hazard, const std::string& id) -> double {
        if (hazard.failure_probability) {
            return *hazard.failure_probability;
        }
        auto it = network.fragility_curves.find(hazard.fragility_curve_id.value_or(""));
        if (it == network.fragility_curves.end()) {
            throw MissingCurve("component '" + id + "' references unknown fragility curve '" +
                               hazard.fragility_curve_id.value_or("") + "'");
        }
        return failure_probability(it->second, hazard.hazard_intensity.value_or(0.0));
    };
    for (const auto& t : network.towers) {
        out.emplace(ComponentKey{AssetType::TransmissionTower, t.id, FailureMode::HurricaneWind},
                    resolve(t.hazard, t.id));
    }
    for (const auto& s : network.substations) {
        out.emplace(ComponentKey{AssetType::Substation, s.id, FailureMode::Flood},
                    resolve(s.hazard, s.id));
    }
    return out;
}

Scenario sample_scenario(const ProbabilityMap& probabilities, std::uint64_t master_seed,
                         std::int64_t scenario_index) {
    Scenario scenario;
    scenario.master_seed = master_seed;
    scenario.scenario_index = scenario_index;
    auto hint = scenario.indicators.end();
    for (const auto& [key, p] : probabilities) {
        double u = uniform_draw(master_seed, scenario_index, key);
        hint = scenario.indicators.emplace_hint(hint, key, u < p);
    }
    return scenario;
}

std::vector<Scenario> sample_ensemble(const ProbabilityMap& probabilities,
                                      std::uint64_t master_seed, std::int64_t n_scenarios,
                                      int workers) {
    if (n_scenarios < 1) {
        throw UsageError("scenario count must be >= 1, got " + std::to_string(n_scenarios));
    }
    std::vector<Scenario> scenarios(static_cast<std::size_t>(n_scenarios));
    if (workers < 1) {
        workers = 1;
    }
    if (workers == 1 || n_scenarios == 1) {
        for (std::int64_t i = 0; i < n_scenarios; ++i) {
            scenarios[static_cast<std::size_t>(i)] =
                sample_scenario(probabilities, master_seed, i);
        }
        return scenarios;
    }

    // Each index is an independent counter stream, so workers can claim
    // indices in any order without affecting the result.
    std::atomic<std::int64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            while (true) {
                std::int64_t i = next.fetch_add(1);
                if (i >= n_scenarios) {
                    break;
                }
                scenarios[static_cast<std::size_t>(i)] =
                    sample_scenario(probabilities, master_seed, i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            next.store(n_scenarios);
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
    return scenarios;
}

}  // namespace gridrte
