#include "gridrte/params_io.hpp"

#include "gridrte/text.hpp"

namespace gridrte {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

AssetType parse_asset_type(const json& obj, const std::string& where) {
    if (!obj.contains("asset_type") || !obj.at("asset_type").is_string()) {
        fail(where, "missing or non-string 'asset_type'");
    }
    auto a = asset_type_from_string(obj.at("asset_type").get<std::string>());
    if (!a) {
        fail(where, "unknown asset_type '" + obj.at("asset_type").get<std::string>() + "'");
    }
    return *a;
}

FailureMode parse_failure_mode(const json& obj, const std::string& where) {
    if (!obj.contains("failure_mode") || !obj.at("failure_mode").is_string()) {
        fail(where, "missing or non-string 'failure_mode'");
    }
    auto f = failure_mode_from_string(obj.at("failure_mode").get<std::string>());
    if (!f) {
        fail(where, "unknown failure_mode '" + obj.at("failure_mode").get<std::string>() + "'");
    }
    return *f;
}

double number_field(const json& obj, const char* field, const std::string& where) {
    if (!obj.contains(field) || !obj.at(field).is_number()) {
        fail(where, std::string("missing or non-numeric '") + field + "'");
    }
    return obj.at(field).get<double>();
}

}  // namespace

RteParameters parameters_from_json(const json& doc) {
    if (!doc.is_object()) {
        fail("document root", "parameters document must be a JSON object");
    }
    RteParameters p;

    if (!doc.contains("base_outage_days") || !doc.at("base_outage_days").is_array()) {
        fail("document root", "'base_outage_days' must be an array");
    }
    std::size_t idx = 0;
    for (const json& entry : doc.at("base_outage_days")) {
        std::string where = "base_outage_days[" + std::to_string(idx++) + "]";
        AssetType a = parse_asset_type(entry, where);
        FailureMode f = parse_failure_mode(entry, where);
        if (!p.base_outage_days.emplace(AssetModeKey{a, f}, number_field(entry, "days", where))
                 .second) {
            fail(where, "duplicate (asset_type, failure_mode) entry");
        }
    }

    if (!doc.contains("loc_slope_table") || !doc.at("loc_slope_table").is_array()) {
        fail("document root", "'loc_slope_table' must be an array");
    }
    idx = 0;
    for (const json& entry : doc.at("loc_slope_table")) {
        std::string where = "loc_slope_table[" + std::to_string(idx++) + "]";
        SlopeBand band;
        if (entry.contains("slope_below_deg")) {
            if (!entry.at("slope_below_deg").is_number()) {
                fail(where, "'slope_below_deg' must be a number");
            }
            band.upper_deg = entry.at("slope_below_deg").get<double>();
        }
        band.multiplier = number_field(entry, "multiplier", where);
        p.loc_slope_table.push_back(band);
    }

    p.substation_loc = number_field(doc, "substation_loc", "document root");
    p.tech_kv_threshold = number_field(doc, "tech_kv_threshold", "document root");
    p.tech_low = number_field(doc, "tech_low", "document root");
    p.tech_high = number_field(doc, "tech_high", "document root");

    if (!doc.contains("work_crews") || !doc.at("work_crews").is_array()) {
        fail("document root", "'work_crews' must be an array");
    }
    idx = 0;
    for (const json& entry : doc.at("work_crews")) {
        std::string where = "work_crews[" + std::to_string(idx++) + "]";
        AssetType a = parse_asset_type(entry, where);
        FailureMode f = parse_failure_mode(entry, where);
        if (!entry.contains("crews") || !entry.at("crews").is_number_integer()) {
            fail(where, "missing or non-integer 'crews'");
        }
        if (!p.work_crews.emplace(AssetModeKey{a, f}, entry.at("crews").get<int>()).second) {
            fail(where, "duplicate (asset_type, failure_mode) entry");
        }
    }

    if (doc.contains("extra_multipliers")) {
        if (!doc.at("extra_multipliers").is_object()) {
            fail("document root", "'extra_multipliers' must be an object");
        }
        for (const auto& [id, value] : doc.at("extra_multipliers").items()) {
            if (!value.is_number()) {
                fail("extra_multipliers", "multiplier for '" + id + "' must be a number");
            }
            p.extra_multipliers.emplace(id, value.get<double>());
        }
    }

    return p;
}

json parameters_to_json(const RteParameters& p) {
    json doc = json::object();

    json base = json::array();
    for (const auto& [key, days] : p.base_outage_days) {
        base.push_back({{"asset_type", std::string(to_string(key.first))},
                        {"failure_mode", std::string(to_string(key.second))},
                        {"days", days}});
    }
    doc["base_outage_days"] = std::move(base);

    json slope = json::array();
    for (const SlopeBand& band : p.loc_slope_table) {
        json entry = {{"multiplier", band.multiplier}};
        if (band.upper_deg) {
            entry["slope_below_deg"] = *band.upper_deg;
        }
        slope.push_back(std::move(entry));
    }
    doc["loc_slope_table"] = std::move(slope);

    doc["substation_loc"] = p.substation_loc;
    doc["tech_kv_threshold"] = p.tech_kv_threshold;
    doc["tech_low"] = p.tech_low;
    doc["tech_high"] = p.tech_high;

    json crews = json::array();
    for (const auto& [key, count] : p.work_crews) {
        crews.push_back({{"asset_type", std::string(to_string(key.first))},
                         {"failure_mode", std::string(to_string(key.second))},
                         {"crews", count}});
    }
    doc["work_crews"] = std::move(crews);

    if (!p.extra_multipliers.empty()) {
        json extras = json::object();
        for (const auto& [id, mult] : p.extra_multipliers) {
            extras[id] = mult;
        }
        doc["extra_multipliers"] = std::move(extras);
    }

    return doc;
}

RteParameters load_parameters(const std::filesystem::path& path) {
    std::string text = read_text_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    RteParameters params;
    try {
        params = parameters_from_json(doc);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    auto violations = validate_parameters(params);
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
    return params;
}

void save_parameters(const RteParameters& params, const std::filesystem::path& path) {
    write_text_file(path, parameters_to_json(params).dump(1) + "\n");
}

std::string canonical_parameters_text(const RteParameters& params) {
    return parameters_to_json(params).dump();
}

}  // namespace gridrte
