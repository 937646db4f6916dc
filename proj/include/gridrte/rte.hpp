#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridrte/asset_types.hpp"
#include "gridrte/network.hpp"
#include "gridrte/sampling.hpp"

namespace gridrte {

using AssetModeKey = std::pair<AssetType, FailureMode>;

/// One band of the tower terrain-slope table: applies while
/// slope < upper_deg; the last band carries no bound and covers the rest.
struct SlopeBand {
    std::optional<double> upper_deg;
    double multiplier = 1.0;
};

/// Recovery-time model parameters. The shipped defaults reproduce the
/// published base outage times, slope bands, voltage threshold, and a
/// single work crew per (asset type, failure mode).
struct RteParameters {
    std::map<AssetModeKey, double> base_outage_days;
    std::vector<SlopeBand> loc_slope_table;
    double substation_loc = 1.0;
    double tech_kv_threshold = 138.0;
    double tech_low = 1.0;
    double tech_high = 1.2;
    std::map<AssetModeKey, int> work_crews;
    /// Per-component hook for factors outside the slope/voltage tables
    /// (access roads, conductor type, ...). Absent means 1.0.
    std::map<std::string, double> extra_multipliers;
};

RteParameters default_parameters();
std::vector<Violation> validate_parameters(const RteParameters& params);

/// Record of one crew-count clamp: requested crews reduced to the number
/// of concurrent failures in an (asset type, failure mode) group.
struct CrewClamp {
    AssetType asset_type;
    FailureMode failure_mode;
    int requested = 0;
    int used = 0;
};

/// Per-scenario recovery-time report in work-crew days.
/// per_component holds failed components only; per_line covers every line
/// (zero when none of its towers failed); per_asset_type covers both asset
/// types. Accumulation order is fixed so reports are byte-stable:
/// per_asset_type(tower) is summed from per_line in line-id order and
/// total from per_asset_type, making the additivity invariants exact.
struct RteReport {
    std::int64_t scenario_index = 0;
    std::map<ComponentKey, double> per_component;
    std::map<std::string, double> per_line;
    std::map<AssetType, double> per_asset_type;
    double total = 0.0;
    std::vector<CrewClamp> crew_clamps;

    // Provenance stamps; empty when the report was built outside a run.
    std::string network_fingerprint;
    std::string params_fingerprint;
};

/// Terrain multiplier: towers look up their slope band, substations use
/// the configured scalar (default 1).
double loc_multiplier(AssetType asset_type, double slope_deg, const RteParameters& params);

/// Voltage-class multiplier: low below the threshold, high at or above it.
double tech_multiplier(double nominal_kv, const RteParameters& params);

/// Numerator of one component's recovery term:
/// Loc * Tech * extra * X * OT, in work-crew days. Zero when X = 0.
/// Throws MissingParameter if the (asset, mode) pair has no base outage time.
double component_term(AssetType asset_type, const std::string& component_id, double slope_deg,
                      double nominal_kv, FailureMode failure_mode, bool failed,
                      const RteParameters& params);

/// Crews usable in parallel for one (asset, mode) group: the requested
/// count clamped to the number of failed components, and 1 when nothing
/// failed (the divisor is then irrelevant since every term is zero).
int effective_work_crews(AssetType asset_type, FailureMode failure_mode,
                         const Scenario& scenario, const RteParameters& params);

/// A line's recovery estimate: the sum of its towers' terms, each divided
/// by the effective tower crew count.
double line_rte(const Network& network, const TransmissionLine& line, const Scenario& scenario,
                const RteParameters& params);

/// Full per-scenario report. Throws CoverageError unless the scenario's
/// indicator set matches the network's eligible components exactly.
RteReport scenario_rte(const Network& network, const Scenario& scenario,
                       const RteParameters& params);

}  // namespace gridrte
