#include "gridrte/rte.hpp"

#include <algorithm>
#include <unordered_map>

#include "gridrte/errors.hpp"
#include "gridrte/text.hpp"

namespace gridrte {

RteParameters default_parameters() {
    RteParameters p;
    p.base_outage_days[{AssetType::TransmissionTower, FailureMode::HurricaneWind}] = 10.0;
    p.base_outage_days[{AssetType::Substation, FailureMode::Flood}] = 15.0;
    p.loc_slope_table = {
        {25.0, 1.0},
        {35.0, 1.05},
        {std::nullopt, 1.1},
    };
    p.substation_loc = 1.0;
    p.tech_kv_threshold = 138.0;
    p.tech_low = 1.0;
    p.tech_high = 1.2;
    p.work_crews[{AssetType::TransmissionTower, FailureMode::HurricaneWind}] = 1;
    p.work_crews[{AssetType::Substation, FailureMode::Flood}] = 1;
    return p;
}

std::vector<Violation> validate_parameters(const RteParameters& params) {
    std::vector<Violation> out;
    if (params.base_outage_days.empty()) {
        out.push_back({"missing_parameter", "", "base_outage_days table is empty"});
    }
    for (const auto& [key, ot] : params.base_outage_days) {
        if (!(ot > 0.0)) {
            out.push_back({"range", std::string(to_string(key.first)),
                           "base outage time for (" + std::string(to_string(key.first)) + ", " +
                               std::string(to_string(key.second)) + ") must be > 0, got " +
                               format_double(ot)});
        }
    }
    if (params.loc_slope_table.empty()) {
        out.push_back({"slope_table", "", "loc_slope_table must have at least one band"});
    }
    double prev_upper = 0.0;
    for (std::size_t i = 0; i < params.loc_slope_table.size(); ++i) {
        const SlopeBand& band = params.loc_slope_table[i];
        const bool last = i + 1 == params.loc_slope_table.size();
        if (!(band.multiplier > 0.0)) {
            out.push_back({"range", "",
                           "slope band " + std::to_string(i) + " multiplier must be > 0, got " +
                               format_double(band.multiplier)});
        }
        if (!last && !band.upper_deg) {
            out.push_back({"slope_table", "",
                           "slope band " + std::to_string(i) +
                               " needs an upper bound (only the last band may be open)"});
        }
        if (band.upper_deg) {
            if (*band.upper_deg <= prev_upper) {
                out.push_back({"slope_table", "",
                               "slope band bounds must be strictly increasing at band " +
                                   std::to_string(i)});
            }
            if (last && *band.upper_deg <= 90.0) {
                out.push_back({"slope_table", "",
                               "slope table leaves (" + format_double(*band.upper_deg) +
                                   ", 90] degrees uncovered"});
            }
            prev_upper = *band.upper_deg;
        }
    }
    if (!(params.substation_loc > 0.0)) {
        out.push_back({"range", "", "substation_loc must be > 0"});
    }
    if (!(params.tech_kv_threshold > 0.0)) {
        out.push_back({"range", "", "tech_kv_threshold must be > 0"});
    }
    if (!(params.tech_low > 0.0) || !(params.tech_high > 0.0)) {
        out.push_back({"range", "", "tech multipliers must be > 0"});
    }
    for (const auto& [key, wc] : params.work_crews) {
        if (wc < 1) {
            out.push_back({"range", std::string(to_string(key.first)),
                           "work crew count for (" + std::string(to_string(key.first)) + ", " +
                               std::string(to_string(key.second)) + ") must be >= 1, got " +
                               std::to_string(wc)});
        }
    }
    for (const auto& [id, mult] : params.extra_multipliers) {
        if (!(mult >= 0.0)) {
            out.push_back({"range", id,
                           "extra multiplier for component '" + id + "' must be >= 0, got " +
                               format_double(mult)});
        }
    }
    return out;
}

double loc_multiplier(AssetType asset_type, double slope_deg, const RteParameters& params) {
    if (asset_type == AssetType::Substation) {
        return params.substation_loc;
    }
    for (const SlopeBand& band : params.loc_slope_table) {
        if (!band.upper_deg || slope_deg < *band.upper_deg) {
            return band.multiplier;
        }
    }
    return params.loc_slope_table.back().multiplier;
}

double tech_multiplier(double nominal_kv, const RteParameters& params) {
    return nominal_kv < params.tech_kv_threshold ? params.tech_low : params.tech_high;
}

namespace {

double base_outage_or_throw(AssetType asset_type, FailureMode failure_mode,
                            const RteParameters& params) {
    auto it = params.base_outage_days.find({asset_type, failure_mode});
    if (it == params.base_outage_days.end()) {
        throw MissingParameter("no base outage time for (" +
                               std::string(to_string(asset_type)) + ", " +
                               std::string(to_string(failure_mode)) + ")");
    }
    return it->second;
}

int requested_crews(AssetType asset_type, FailureMode failure_mode,
                    const RteParameters& params) {
    auto it = params.work_crews.find({asset_type, failure_mode});
    return it == params.work_crews.end() ? 1 : it->second;
}

double extra_multiplier(const std::string& component_id, const RteParameters& params) {
    auto it = params.extra_multipliers.find(component_id);
    return it == params.extra_multipliers.end() ? 1.0 : it->second;
}

}  // namespace

double component_term(AssetType asset_type, const std::string& component_id, double slope_deg,
                      double nominal_kv, FailureMode failure_mode, bool failed,
                      const RteParameters& params) {
    double base = base_outage_or_throw(asset_type, failure_mode, params);
    if (!failed) {
        return 0.0;
    }
    return loc_multiplier(asset_type, slope_deg, params) * tech_multiplier(nominal_kv, params) *
           extra_multiplier(component_id, params) * base;
}

int effective_work_crews(AssetType asset_type, FailureMode failure_mode,
                         const Scenario& scenario, const RteParameters& params) {
    int failed = 0;
    for (const auto& [key, x] : scenario.indicators) {
        if (x && key.asset_type == asset_type && key.failure_mode == failure_mode) {
            ++failed;
        }
    }
    if (failed == 0) {
        return 1;
    }
    return std::min(requested_crews(asset_type, failure_mode, params), failed);
}

double line_rte(const Network& network, const TransmissionLine& line, const Scenario& scenario,
                const RteParameters& params) {
    int crews = effective_work_crews(AssetType::TransmissionTower, FailureMode::HurricaneWind,
                                     scenario, params);
    double sum = 0.0;
    for (const std::string& tid : line.tower_ids) {
        const Tower* tower = network.find_tower(tid);
        if (tower == nullptr) {
            continue;  // validation rejects this; skip defensively
        }
        ComponentKey key{AssetType::TransmissionTower, tid, FailureMode::HurricaneWind};
        auto it = scenario.indicators.find(key);
        bool failed = it != scenario.indicators.end() && it->second;
        if (failed) {
            sum += component_term(AssetType::TransmissionTower, tid, tower->terrain_slope,
                                  tower->nominal_kv, FailureMode::HurricaneWind, true, params) /
                   crews;
        }
    }
    return sum;
}

RteReport scenario_rte(const Network& network, const Scenario& scenario,
                       const RteParameters& params) {
    RteReport report;
    report.scenario_index = scenario.scenario_index;

    // Coverage: the indicator set must be exactly the network's eligible
    // component set.
    std::vector<ComponentKey> eligible;
    eligible.reserve(network.towers.size() + network.substations.size());
    for (const auto& t : network.towers) {
        eligible.push_back({AssetType::TransmissionTower, t.id, FailureMode::HurricaneWind});
    }
    for (const auto& s : network.substations) {
        eligible.push_back({AssetType::Substation, s.id, FailureMode::Flood});
    }
    std::sort(eligible.begin(), eligible.end());
    auto scen_it = scenario.indicators.begin();
    for (const ComponentKey& key : eligible) {
        if (scen_it == scenario.indicators.end() || key < scen_it->first) {
            throw CoverageError("scenario " + std::to_string(scenario.scenario_index) +
                                " has no indicator for component " + to_string(key));
        }
        if (scen_it->first < key) {
            throw CoverageError("scenario " + std::to_string(scenario.scenario_index) +
                                " carries unknown component " + to_string(scen_it->first));
        }
        ++scen_it;
    }
    if (scen_it != scenario.indicators.end()) {
        throw CoverageError("scenario " + std::to_string(scenario.scenario_index) +
                            " carries unknown component " + to_string(scen_it->first));
    }

    // More crews than concurrent failures would idle; clamp per group.
    std::map<AssetModeKey, int> failed_counts;
    for (const auto& [key, x] : scenario.indicators) {
        if (x) {
            ++failed_counts[{key.asset_type, key.failure_mode}];
        }
    }
    std::map<AssetModeKey, int> crews;
    for (const auto& [group, count] : failed_counts) {
        int requested = requested_crews(group.first, group.second, params);
        int used = std::min(requested, count);
        crews[group] = used;
        if (used < requested) {
            report.crew_clamps.push_back({group.first, group.second, requested, used});
        }
    }

    std::unordered_map<std::string, const Tower*> tower_by_id;
    tower_by_id.reserve(network.towers.size());
    for (const auto& t : network.towers) {
        tower_by_id.emplace(t.id, &t);
    }
    std::unordered_map<std::string, const Substation*> sub_by_id;
    sub_by_id.reserve(network.substations.size());
    for (const auto& s : network.substations) {
        sub_by_id.emplace(s.id, &s);
    }

    // Per-component shares for failed components, divided per term.
    auto hint = report.per_component.end();
    for (const auto& [key, x] : scenario.indicators) {
        if (!x) {
            continue;
        }
        double term = 0.0;
        if (key.asset_type == AssetType::TransmissionTower) {
            const Tower* t = tower_by_id.at(key.component_id);
            term = component_term(key.asset_type, key.component_id, t->terrain_slope,
                                  t->nominal_kv, key.failure_mode, true, params);
        } else {
            const Substation* s = sub_by_id.at(key.component_id);
            term = component_term(key.asset_type, key.component_id, 0.0, s->nominal_kv,
                                  key.failure_mode, true, params);
        }
        int divisor = crews.at({key.asset_type, key.failure_mode});
        hint = report.per_component.emplace_hint(hint, key, term / divisor);
    }

    // Every line appears, zero-valued when none of its towers failed.
    for (const auto& line : network.lines) {
        double sum = 0.0;
        for (const std::string& tid : line.tower_ids) {
            auto it = report.per_component.find(
                {AssetType::TransmissionTower, tid, FailureMode::HurricaneWind});
            if (it != report.per_component.end()) {
                sum += it->second;
            }
        }
        report.per_line.emplace(line.id, sum);
    }

    // Asset totals: towers from per-line sums in line-id order (making the
    // additivity invariants exact), substations in component order.
    double tower_total = 0.0;
    for (const auto& [line_id, value] : report.per_line) {
        tower_total += value;
    }
    double substation_total = 0.0;
    for (const auto& [key, value] : report.per_component) {
        if (key.asset_type == AssetType::Substation) {
            substation_total += value;
        }
    }
    report.per_asset_type[AssetType::TransmissionTower] = tower_total;
    report.per_asset_type[AssetType::Substation] = substation_total;
    report.total = tower_total + substation_total;
    return report;
}

}  // namespace gridrte
