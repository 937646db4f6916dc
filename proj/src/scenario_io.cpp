#include "gridrte/scenario_io.hpp"

#include <cinttypes>
#include <cstdio>

#include "gridrte/errors.hpp"
#include "gridrte/text.hpp"

#include "json.hpp"

namespace gridrte {

std::string scenario_csv_text(const Scenario& scenario) {
    std::string out = "asset_type,component_id,failure_mode,failed\n";
    // std::map iteration is ComponentKey order: (asset_type, component_id)
    // ascending, giving byte-stable diffs.
    for (const auto& [key, failed] : scenario.indicators) {
        out += to_string(key.asset_type);
        out += ',';
        out += key.component_id;
        out += ',';
        out += to_string(key.failure_mode);
        out += failed ? ",1\n" : ",0\n";
    }
    return out;
}

std::filesystem::path scenario_file_name(std::int64_t scenario_index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "scenario_%05" PRId64 ".csv", scenario_index);
    return buf;
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
    std::filesystem::path p = csv_path;
    p.replace_extension(".meta.json");
    return p;
}

void write_scenario(const Scenario& scenario, const std::string& network_fp,
                    const std::filesystem::path& csv_path) {
    write_text_file(csv_path, scenario_csv_text(scenario));
    nlohmann::json meta = {
        {"master_seed", scenario.master_seed},
        {"scenario_index", scenario.scenario_index},
        {"network_fingerprint", network_fp},
    };
    write_text_file(sidecar_path(csv_path), meta.dump(1) + "\n");
}

ScenarioFile read_scenario(const std::filesystem::path& csv_path) {
    ScenarioFile out;

    std::string meta_text = read_text_file(sidecar_path(csv_path));
    try {
        nlohmann::json meta = nlohmann::json::parse(meta_text);
        out.scenario.master_seed = meta.at("master_seed").get<std::uint64_t>();
        out.scenario.scenario_index = meta.at("scenario_index").get<std::int64_t>();
        out.network_fingerprint = meta.at("network_fingerprint").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(sidecar_path(csv_path).string() + ": " + e.what());
    }

    std::string text = read_text_file(csv_path);
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line(text.data() + pos,
                              (eol == std::string::npos ? text.size() : eol) - pos);
        pos = eol == std::string::npos ? text.size() : eol + 1;
        ++line_no;
        if (line.ends_with('\r')) {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (line_no == 1) {
            if (line != "asset_type,component_id,failure_mode,failed") {
                throw ParseError(csv_path.string() + ": unexpected header '" +
                                 std::string(line) + "'");
            }
            continue;
        }
        auto fields = split_csv_line(line);
        std::string where = csv_path.string() + ":" + std::to_string(line_no);
        if (fields.size() != 4) {
            throw ParseError(where + ": expected 4 fields, got " +
                             std::to_string(fields.size()));
        }
        auto asset = asset_type_from_string(fields[0]);
        if (!asset) {
            throw ParseError(where + ": unknown asset_type '" + fields[0] + "'");
        }
        auto mode = failure_mode_from_string(fields[2]);
        if (!mode) {
            throw ParseError(where + ": unknown failure_mode '" + fields[2] + "'");
        }
        bool failed;
        if (fields[3] == "0") {
            failed = false;
        } else if (fields[3] == "1") {
            failed = true;
        } else {
            throw ParseError(where + ": 'failed' must be 0 or 1, got '" + fields[3] + "'");
        }
        ComponentKey key{*asset, fields[1], *mode};
        if (!out.scenario.indicators.emplace(key, failed).second) {
            throw ParseError(where + ": duplicate row for " + to_string(key));
        }
    }
    return out;
}

}  // namespace gridrte
