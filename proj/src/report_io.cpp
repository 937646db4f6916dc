#include "gridrte/report_io.hpp"

#include <array>

#include "gridrte/errors.hpp"
#include "gridrte/scenario_io.hpp"
#include "gridrte/text.hpp"

#include "json.hpp"

namespace gridrte {

namespace {

// Display names used in the summary file's component column.
std::string_view summary_row_name(AssetType a) {
    return a == AssetType::TransmissionTower ? "Transmission" : "Substation";
}

}  // namespace

std::string reports_csv_text(const std::vector<RteReport>& reports) {
    std::string out = "scenario_index,granularity,key,work_crew_days\n";
    for (const RteReport& report : reports) {
        std::string prefix = std::to_string(report.scenario_index);
        for (const auto& [key, value] : report.per_component) {
            out += prefix;
            out += ",component,";
            out += to_string(key);
            out += ',';
            out += format_double(value);
            out += '\n';
        }
        for (const auto& [line_id, value] : report.per_line) {
            out += prefix;
            out += ",line,";
            out += line_id;
            out += ',';
            out += format_double(value);
            out += '\n';
        }
        for (const auto& [asset, value] : report.per_asset_type) {
            out += prefix;
            out += ",asset_type,";
            out += to_string(asset);
            out += ',';
            out += format_double(value);
            out += '\n';
        }
        out += prefix;
        out += ",total,total,";
        out += format_double(report.total);
        out += '\n';
    }
    return out;
}

void write_reports(const std::vector<RteReport>& reports, const std::string& network_fp,
                   const std::string& params_fp, const std::filesystem::path& csv_path) {
    write_text_file(csv_path, reports_csv_text(reports));
    nlohmann::json meta = {
        {"network_fingerprint", network_fp},
        {"params_fingerprint", params_fp},
        {"n_scenarios", reports.size()},
    };
    write_text_file(sidecar_path(csv_path), meta.dump(1) + "\n");
}

std::vector<RteReport> read_reports(const std::filesystem::path& csv_path) {
    std::string network_fp;
    std::string params_fp;
    try {
        nlohmann::json meta = nlohmann::json::parse(read_text_file(sidecar_path(csv_path)));
        network_fp = meta.at("network_fingerprint").get<std::string>();
        params_fp = meta.at("params_fingerprint").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(sidecar_path(csv_path).string() + ": " + e.what());
    }

    std::string text = read_text_file(csv_path);
    std::map<std::int64_t, RteReport> by_index;

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
            if (line != "scenario_index,granularity,key,work_crew_days") {
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
        std::int64_t index = parse_int(fields[0], "scenario_index");
        double value = parse_double(fields[3], "work_crew_days");
        RteReport& report = by_index[index];
        report.scenario_index = index;
        report.network_fingerprint = network_fp;
        report.params_fingerprint = params_fp;

        const std::string& granularity = fields[1];
        const std::string& key = fields[2];
        if (granularity == "component") {
            std::size_t c1 = key.find(':');
            std::size_t c2 = key.rfind(':');
            if (c1 == std::string::npos || c2 == c1) {
                throw ParseError(where + ": malformed component key '" + key + "'");
            }
            auto asset = asset_type_from_string(key.substr(0, c1));
            auto mode = failure_mode_from_string(key.substr(c2 + 1));
            if (!asset || !mode) {
                throw ParseError(where + ": malformed component key '" + key + "'");
            }
            report.per_component[{*asset, key.substr(c1 + 1, c2 - c1 - 1), *mode}] = value;
        } else if (granularity == "line") {
            report.per_line[key] = value;
        } else if (granularity == "asset_type") {
            auto asset = asset_type_from_string(key);
            if (!asset) {
                throw ParseError(where + ": unknown asset_type '" + key + "'");
            }
            report.per_asset_type[*asset] = value;
        } else if (granularity == "total") {
            report.total = value;
        } else {
            throw ParseError(where + ": unknown granularity '" + granularity + "'");
        }
    }

    std::vector<RteReport> out;
    out.reserve(by_index.size());
    for (auto& [index, report] : by_index) {
        out.push_back(std::move(report));
    }
    return out;
}

std::string summary_csv_text(const EnsembleSummary& summary) {
    std::string out = "component,n,mean_days,std_days\n";
    auto row = [&](std::string_view name, const SeriesStats& s) {
        out += name;
        out += ',';
        out += std::to_string(s.n);
        out += ',';
        out += format_double(s.mean);
        out += ',';
        if (s.sample_std) {
            out += format_double(*s.sample_std);
        }
        out += '\n';
    };
    static constexpr std::array<AssetType, 2> row_order = {AssetType::TransmissionTower,
                                                           AssetType::Substation};
    for (AssetType asset : row_order) {
        auto it = summary.per_asset_type.find(asset);
        if (it != summary.per_asset_type.end()) {
            row(summary_row_name(asset), it->second);
        }
    }
    row("Cumulative", summary.cumulative);
    return out;
}

std::string box_stats_csv_text(const std::map<std::string, BoxStats>& by_line) {
    std::string out = "line_id,q1,median,q3,whisker_low,whisker_high,n_outliers\n";
    for (const auto& [line_id, box] : by_line) {
        out += line_id;
        out += ',';
        out += format_double(box.q1);
        out += ',';
        out += format_double(box.median);
        out += ',';
        out += format_double(box.q3);
        out += ',';
        out += format_double(box.whisker_low);
        out += ',';
        out += format_double(box.whisker_high);
        out += ',';
        out += std::to_string(box.outliers.size());
        out += '\n';
    }
    return out;
}

}  // namespace gridrte
