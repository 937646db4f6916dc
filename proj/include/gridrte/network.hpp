#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridrte/asset_types.hpp"
#include "gridrte/errors.hpp"
#include "gridrte/fragility.hpp"

namespace gridrte {

/// Hazard exposure of one component: either a hazard intensity to be mapped
/// through a fragility curve, or a precomputed failure probability taken
/// as-is. Exactly one of the two must be set.
struct HazardInput {
    std::optional<std::string> fragility_curve_id;
    std::optional<double> hazard_intensity;
    std::optional<double> failure_probability;
};

struct Substation {
    std::string id;
    std::string bus_id;
    double nominal_kv = 0.0;
    HazardInput hazard;
};

struct Tower {
    std::string id;
    std::string line_id;
    double terrain_slope = 0.0;  // degrees, [0, 90]
    double nominal_kv = 0.0;     // inherited from the owning line
    HazardInput hazard;
};

struct TransmissionLine {
    std::string id;
    std::string from_bus;
    std::string to_bus;
    double nominal_kv = 0.0;
    std::vector<std::string> tower_ids;
};

/// Immutable after load; safe to share read-only across scenario workers.
/// Buses are opaque labels -- no topology or power flow is modeled here.
struct Network {
    std::vector<Substation> substations;
    std::vector<TransmissionLine> lines;
    std::vector<Tower> towers;
    std::map<std::string, FragilityCurve> fragility_curves;

    const Tower* find_tower(const std::string& id) const;
    const TransmissionLine* find_line(const std::string& id) const;
    const Substation* find_substation(const std::string& id) const;
};

/// Returns every invariant violation found; empty means the network is
/// well-formed. Checks are guarded so one injected fault reports once:
/// consistency checks only run between components whose references resolve.
std::vector<Violation> validate_network(const Network& network);

/// Throws ValidationError when validate_network is non-empty.
void require_valid(const Network& network);

}  // namespace gridrte
