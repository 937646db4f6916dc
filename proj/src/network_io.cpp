#include "gridrte/network_io.hpp"

#include <algorithm>
#include <utility>

#include "gridrte/text.hpp"

namespace gridrte {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const json& require_field(const json& obj, const char* field, const std::string& where) {
    auto it = obj.find(field);
    if (it == obj.end()) {
        fail(where, std::string("missing required field '") + field + "'");
    }
    return *it;
}

std::string require_string(const json& obj, const char* field, const std::string& where) {
    const json& v = require_field(obj, field, where);
    if (!v.is_string()) {
        fail(where, std::string("field '") + field + "' must be a string");
    }
    return v.get<std::string>();
}

double require_number(const json& obj, const char* field, const std::string& where) {
    const json& v = require_field(obj, field, where);
    if (!v.is_number()) {
        fail(where, std::string("field '") + field + "' must be a number");
    }
    return v.get<double>();
}

double number_at(const json& v, const char* what, const std::string& where) {
    if (!v.is_number()) {
        fail(where, std::string(what) + " must be a number");
    }
    return v.get<double>();
}

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> known,
                           const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find_if(known.begin(), known.end(), [&](const char* k) {
                return it.key() == k;
            }) == known.end()) {
            fail(where, "unknown field '" + it.key() + "'");
        }
    }
}

HazardInput hazard_from_json(const json& obj, const std::string& where) {
    HazardInput hazard;
    if (obj.contains("fragility_curve_id")) {
        const json& v = obj.at("fragility_curve_id");
        if (!v.is_string()) {
            fail(where, "field 'fragility_curve_id' must be a string");
        }
        hazard.fragility_curve_id = v.get<std::string>();
    }
    if (obj.contains("hazard_intensity")) {
        hazard.hazard_intensity = number_at(obj.at("hazard_intensity"), "hazard_intensity", where);
    }
    if (obj.contains("failure_probability")) {
        hazard.failure_probability =
            number_at(obj.at("failure_probability"), "failure_probability", where);
    }
    return hazard;
}

json hazard_to_json(const HazardInput& hazard) {
    json obj = json::object();
    if (hazard.fragility_curve_id) {
        obj["fragility_curve_id"] = *hazard.fragility_curve_id;
    }
    if (hazard.hazard_intensity) {
        obj["hazard_intensity"] = *hazard.hazard_intensity;
    }
    if (hazard.failure_probability) {
        obj["failure_probability"] = *hazard.failure_probability;
    }
    return obj;
}

const json& require_array(const json& doc, const char* field) {
    const json& v = require_field(doc, field, "document root");
    if (!v.is_array()) {
        fail("document root", std::string("'") + field + "' must be an array");
    }
    return v;
}

}  // namespace

Network network_from_json(const json& doc) {
    if (!doc.is_object()) {
        fail("document root", "network document must be a JSON object");
    }
    reject_unknown_fields(doc, {"substations", "lines", "towers", "fragility_curves"},
                          "document root");

    Network network;

    std::size_t idx = 0;
    for (const json& entry : require_array(doc, "fragility_curves")) {
        std::string where = "fragility_curves[" + std::to_string(idx++) + "]";
        reject_unknown_fields(entry, {"id", "knots"}, where);
        FragilityCurve curve;
        curve.id = require_string(entry, "id", where);
        const json& knots = require_field(entry, "knots", where);
        if (!knots.is_array()) {
            fail(where, "field 'knots' must be an array");
        }
        for (const json& knot : knots) {
            std::string kwhere = where + ".knots";
            reject_unknown_fields(knot, {"intensity", "probability"}, kwhere);
            curve.knots.push_back({require_number(knot, "intensity", kwhere),
                                   require_number(knot, "probability", kwhere)});
        }
        if (network.fragility_curves.count(curve.id)) {
            throw ValidationError({{"duplicate_id", curve.id,
                                    "duplicate fragility curve id '" + curve.id + "'"}});
        }
        network.fragility_curves.emplace(curve.id, std::move(curve));
    }

    idx = 0;
    for (const json& entry : require_array(doc, "substations")) {
        std::string where = "substations[" + std::to_string(idx++) + "]";
        reject_unknown_fields(entry,
                              {"id", "bus_id", "nominal_kv", "fragility_curve_id",
                               "hazard_intensity", "failure_probability"},
                              where);
        Substation s;
        s.id = require_string(entry, "id", where);
        s.bus_id = require_string(entry, "bus_id", where);
        s.nominal_kv = require_number(entry, "nominal_kv", where);
        s.hazard = hazard_from_json(entry, where);
        network.substations.push_back(std::move(s));
    }

    idx = 0;
    for (const json& entry : require_array(doc, "lines")) {
        std::string where = "lines[" + std::to_string(idx++) + "]";
        reject_unknown_fields(entry, {"id", "from_bus", "to_bus", "nominal_kv", "tower_ids"},
                              where);
        TransmissionLine l;
        l.id = require_string(entry, "id", where);
        l.from_bus = require_string(entry, "from_bus", where);
        l.to_bus = require_string(entry, "to_bus", where);
        l.nominal_kv = require_number(entry, "nominal_kv", where);
        const json& tower_ids = require_field(entry, "tower_ids", where);
        if (!tower_ids.is_array()) {
            fail(where, "field 'tower_ids' must be an array");
        }
        for (const json& tid : tower_ids) {
            if (!tid.is_string()) {
                fail(where, "tower_ids entries must be strings");
            }
            l.tower_ids.push_back(tid.get<std::string>());
        }
        network.lines.push_back(std::move(l));
    }

    std::map<std::string, double> line_kv;
    for (const auto& l : network.lines) {
        line_kv.emplace(l.id, l.nominal_kv);
    }

    idx = 0;
    for (const json& entry : require_array(doc, "towers")) {
        std::string where = "towers[" + std::to_string(idx++) + "]";
        reject_unknown_fields(entry,
                              {"id", "line_id", "terrain_slope", "nominal_kv",
                               "fragility_curve_id", "hazard_intensity", "failure_probability"},
                              where);
        Tower t;
        t.id = require_string(entry, "id", where);
        t.line_id = require_string(entry, "line_id", where);
        t.terrain_slope = require_number(entry, "terrain_slope", where);
        t.hazard = hazard_from_json(entry, where);
        // nominal_kv is inherited from the owning line; an explicit value in
        // the file is kept so validation can reject a mismatching override.
        if (entry.contains("nominal_kv")) {
            t.nominal_kv = number_at(entry.at("nominal_kv"), "nominal_kv", where);
        } else if (auto it = line_kv.find(t.line_id); it != line_kv.end()) {
            t.nominal_kv = it->second;
        }
        network.towers.push_back(std::move(t));
    }

    return network;
}

json network_to_json(const Network& network) {
    json doc = json::object();

    json curves = json::array();
    for (const auto& [id, curve] : network.fragility_curves) {
        json knots = json::array();
        for (const auto& k : curve.knots) {
            knots.push_back({{"intensity", k.intensity}, {"probability", k.probability}});
        }
        curves.push_back({{"id", id}, {"knots", std::move(knots)}});
    }
    doc["fragility_curves"] = std::move(curves);

    json subs = json::array();
    for (const auto& s : network.substations) {
        json obj = hazard_to_json(s.hazard);
        obj["id"] = s.id;
        obj["bus_id"] = s.bus_id;
        obj["nominal_kv"] = s.nominal_kv;
        subs.push_back(std::move(obj));
    }
    doc["substations"] = std::move(subs);

    json lines = json::array();
    for (const auto& l : network.lines) {
        lines.push_back({{"id", l.id},
                         {"from_bus", l.from_bus},
                         {"to_bus", l.to_bus},
                         {"nominal_kv", l.nominal_kv},
                         {"tower_ids", l.tower_ids}});
    }
    doc["lines"] = std::move(lines);

    json towers = json::array();
    for (const auto& t : network.towers) {
        json obj = hazard_to_json(t.hazard);
        obj["id"] = t.id;
        obj["line_id"] = t.line_id;
        obj["terrain_slope"] = t.terrain_slope;
        towers.push_back(std::move(obj));
    }
    doc["towers"] = std::move(towers);

    return doc;
}

Network load_network(const std::filesystem::path& path) {
    std::string text = read_text_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    Network network;
    try {
        network = network_from_json(doc);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    require_valid(network);
    return network;
}

void save_network(const Network& network, const std::filesystem::path& path) {
    write_text_file(path, network_to_json(network).dump(1) + "\n");
}

std::string canonical_network_text(const Network& network) {
    // Component order in the file is presentation, not substance: canonical
    // form sorts by id so reordered inputs fingerprint identically.
    Network sorted = network;
    std::sort(sorted.substations.begin(), sorted.substations.end(),
              [](const Substation& a, const Substation& b) { return a.id < b.id; });
    std::sort(sorted.lines.begin(), sorted.lines.end(),
              [](const TransmissionLine& a, const TransmissionLine& b) { return a.id < b.id; });
    std::sort(sorted.towers.begin(), sorted.towers.end(),
              [](const Tower& a, const Tower& b) { return a.id < b.id; });
    return network_to_json(sorted).dump();
}

}  // namespace gridrte
