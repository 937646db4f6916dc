#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gridrte/asset_types.hpp"
#include "gridrte/network.hpp"

namespace gridrte {

/// Failure probability for every eligible (asset, component, mode) slot.
/// std::map keeps iteration in ComponentKey order, which all serialized
/// artifacts rely on.
using ProbabilityMap = std::map<ComponentKey, double>;

/// One stochastic realization of component failures.
struct Scenario {
    std::uint64_t master_seed = 0;
    std::int64_t scenario_index = 0;
    std::map<ComponentKey, bool> indicators;
};

/// SplitMix64 finalizer: the documented mixer behind every uniform draw.
/// Counter-based, so draws depend only on what is mixed in -- never on
/// call order or thread count.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Stable 64-bit hash of a component key (FNV-1a over the key's stable
/// names, 0x1F-separated).
std::uint64_t component_key_hash(const ComponentKey& key);

/// The uniform draw in [0,1) for one (seed, scenario, component) slot.
/// 53-bit mantissa, so u < 1 strictly: probability 1 always fails and
/// probability 0 never does under the strict u < p rule.
double uniform_draw(std::uint64_t master_seed, std::int64_t scenario_index,
                    const ComponentKey& key);

/// Maps every eligible component to its failure probability: direct
/// probabilities pass through, hazard intensities go through their curve.
/// Throws MissingCurve if a referenced curve is absent (validation
/// normally rules this out; kept as defense).
ProbabilityMap component_failure_probabilities(const Network& network);

/// Realizes one scenario: X = 1 iff u < p, with u drawn per component from
/// the counter-based stream. Pure function of (probabilities, seed, index).
Scenario sample_scenario(const ProbabilityMap& probabilities, std::uint64_t master_seed,
                         std::int64_t scenario_index);

/// Scenarios 0..n_scenarios-1. Identical output for identical inputs at
/// any worker count.
std::vector<Scenario> sample_ensemble(const ProbabilityMap& probabilities,
                                      std::uint64_t master_seed, std::int64_t n_scenarios,
                                      int workers = 1);

}  // namespace gridrte
