#include "gridrte/network.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "gridrte/text.hpp"

namespace gridrte {

std::string format_violations(const std::vector<Violation>& violations) {
    std::string out = "network validation failed (" + std::to_string(violations.size()) +
                      " violation" + (violations.size() == 1 ? "" : "s") + ")";
    for (const auto& v : violations) {
        out += "\n  [" + v.category + "] " + v.message;
    }
    return out;
}

const Tower* Network::find_tower(const std::string& id) const {
    auto it = std::find_if(towers.begin(), towers.end(),
                           [&](const Tower& t) { return t.id == id; });
    return it == towers.end() ? nullptr : &*it;
}

const TransmissionLine* Network::find_line(const std::string& id) const {
    auto it = std::find_if(lines.begin(), lines.end(),
                           [&](const TransmissionLine& l) { return l.id == id; });
    return it == lines.end() ? nullptr : &*it;
}

const Substation* Network::find_substation(const std::string& id) const {
    auto it = std::find_if(substations.begin(), substations.end(),
                           [&](const Substation& s) { return s.id == id; });
    return it == substations.end() ? nullptr : &*it;
}

namespace {

// Ids appear verbatim in delimited artifacts, so keep them to a charset
// that can never collide with field or key separators.
bool id_is_clean(const std::string& id) {
    if (id.empty()) {
        return false;
    }
    return std::all_of(id.begin(), id.end(), [](unsigned char c) {
        return std::isalnum(c) != 0 || c == '_' || c == '.' || c == '-';
    });
}

void check_id(const std::string& id, const char* what, std::vector<Violation>& out) {
    if (!id_is_clean(id)) {
        out.push_back({"id_charset", id,
                       std::string(what) + " id '" + id +
                           "' must be non-empty and use only [A-Za-z0-9_.-]"});
    }
}

void check_duplicates(const std::vector<std::string>& ids, const char* what,
                      std::vector<Violation>& out) {
    std::unordered_set<std::string> seen;
    for (const auto& id : ids) {
        if (!seen.insert(id).second) {
            out.push_back({"duplicate_id", id,
                           std::string("duplicate ") + what + " id '" + id + "'"});
        }
    }
}

void check_hazard(const HazardInput& hazard, const std::string& id,
                  const std::map<std::string, FragilityCurve>& curves,
                  std::vector<Violation>& out) {
    const bool has_intensity = hazard.hazard_intensity.has_value();
    const bool has_probability = hazard.failure_probability.has_value();
    if (has_intensity == has_probability) {
        out.push_back({"hazard_input", id,
                       "component '" + id +
                           "' must carry exactly one of hazard_intensity or "
                           "failure_probability"});
        return;
    }
    if (has_probability) {
        double p = *hazard.failure_probability;
        if (!(p >= 0.0 && p <= 1.0)) {
            out.push_back({"range", id,
                           "component '" + id + "' failure_probability " + format_double(p) +
                               " outside [0,1]"});
        }
    }
    if (has_intensity) {
        if (*hazard.hazard_intensity < 0.0) {
            out.push_back({"range", id,
                           "component '" + id + "' hazard_intensity " +
                               format_double(*hazard.hazard_intensity) + " must be >= 0"});
        }
        if (!hazard.fragility_curve_id) {
            out.push_back({"hazard_input", id,
                           "component '" + id +
                               "' has hazard_intensity but no fragility_curve_id"});
        }
    }
    if (hazard.fragility_curve_id && !curves.count(*hazard.fragility_curve_id)) {
        out.push_back({"dangling_reference", id,
                       "component '" + id + "' references unknown fragility curve '" +
                           *hazard.fragility_curve_id + "'"});
    }
}

}  // namespace

std::vector<Violation> validate_network(const Network& network) {
    std::vector<Violation> out;

    for (const auto& [id, curve] : network.fragility_curves) {
        check_id(id, "fragility curve", out);
        if (curve.id != id) {
            out.push_back({"curve_key", id,
                           "fragility curve keyed '" + id + "' carries id '" + curve.id + "'"});
        }
        auto curve_violations = validate_curve(curve);
        out.insert(out.end(), curve_violations.begin(), curve_violations.end());
    }

    std::vector<std::string> sub_ids, line_ids, tower_ids;
    for (const auto& s : network.substations) {
        sub_ids.push_back(s.id);
    }
    for (const auto& l : network.lines) {
        line_ids.push_back(l.id);
    }
    for (const auto& t : network.towers) {
        tower_ids.push_back(t.id);
    }
    check_duplicates(sub_ids, "substation", out);
    check_duplicates(line_ids, "line", out);
    check_duplicates(tower_ids, "tower", out);

    std::unordered_map<std::string, const TransmissionLine*> line_by_id;
    for (const auto& l : network.lines) {
        line_by_id.emplace(l.id, &l);
    }
    std::unordered_map<std::string, const Tower*> tower_by_id;
    for (const auto& t : network.towers) {
        tower_by_id.emplace(t.id, &t);
    }

    for (const auto& s : network.substations) {
        check_id(s.id, "substation", out);
        if (!(s.nominal_kv > 0.0)) {
            out.push_back({"range", s.id,
                           "substation '" + s.id + "' nominal_kv must be positive, got " +
                               format_double(s.nominal_kv)});
        }
        check_hazard(s.hazard, s.id, network.fragility_curves, out);
    }

    for (const auto& l : network.lines) {
        check_id(l.id, "line", out);
        if (!(l.nominal_kv > 0.0)) {
            out.push_back({"range", l.id,
                           "line '" + l.id + "' nominal_kv must be positive, got " +
                               format_double(l.nominal_kv)});
        }
        if (l.tower_ids.empty()) {
            out.push_back({"empty_line", l.id, "line '" + l.id + "' lists no towers"});
        }
        std::unordered_set<std::string> listed;
        for (const auto& tid : l.tower_ids) {
            if (!listed.insert(tid).second) {
                out.push_back({"duplicate_tower_ref", l.id,
                               "line '" + l.id + "' lists tower '" + tid + "' more than once"});
                continue;
            }
            auto it = tower_by_id.find(tid);
            if (it == tower_by_id.end()) {
                out.push_back({"dangling_reference", l.id,
                               "line '" + l.id + "' references unknown tower '" + tid + "'"});
                continue;
            }
            // Only flag the cross-link when the tower's own reference
            // resolves; a dangling line_id is already reported below.
            const Tower& t = *it->second;
            if (line_by_id.count(t.line_id) && t.line_id != l.id) {
                out.push_back({"line_membership", tid,
                               "line '" + l.id + "' lists tower '" + tid +
                                   "' which belongs to line '" + t.line_id + "'"});
            }
        }
    }

    for (const auto& t : network.towers) {
        check_id(t.id, "tower", out);
        if (!(t.terrain_slope >= 0.0 && t.terrain_slope <= 90.0)) {
            out.push_back({"range", t.id,
                           "tower '" + t.id + "' terrain_slope " + format_double(t.terrain_slope) +
                               " outside [0,90] degrees"});
        }
        auto line_it = line_by_id.find(t.line_id);
        if (line_it == line_by_id.end()) {
            out.push_back({"dangling_reference", t.id,
                           "tower '" + t.id + "' references unknown line '" + t.line_id + "'"});
        } else {
            const TransmissionLine& line = *line_it->second;
            if (t.nominal_kv != line.nominal_kv) {
                out.push_back({"kv_override", t.id,
                               "tower '" + t.id + "' nominal_kv " + format_double(t.nominal_kv) +
                                   " differs from line '" + line.id + "' nominal_kv " +
                                   format_double(line.nominal_kv)});
            }
            if (std::find(line.tower_ids.begin(), line.tower_ids.end(), t.id) ==
                line.tower_ids.end()) {
                out.push_back({"line_membership", t.id,
                               "tower '" + t.id + "' is not listed by its line '" + t.line_id +
                                   "'"});
            }
        }
        check_hazard(t.hazard, t.id, network.fragility_curves, out);
    }

    return out;
}

void require_valid(const Network& network) {
    auto violations = validate_network(network);
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
}

}  // namespace gridrte
