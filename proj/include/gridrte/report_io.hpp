#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gridrte/rte.hpp"
#include "gridrte/stats.hpp"

namespace gridrte {

/// Report files: `scenario_index,granularity,key,work_crew_days` with
/// granularity in {component, line, asset_type, total}. Component rows are
/// emitted for failed components only; line and asset_type rows always
/// appear (zero-valued when nothing failed). One file holds any number of
/// scenarios; the sidecar carries the network/params fingerprints.
std::string reports_csv_text(const std::vector<RteReport>& reports);

void write_reports(const std::vector<RteReport>& reports, const std::string& network_fp,
                   const std::string& params_fp, const std::filesystem::path& csv_path);
std::vector<RteReport> read_reports(const std::filesystem::path& csv_path);

/// Ensemble summary: `component,n,mean_days,std_days` with rows
/// Transmission, Substation, Cumulative. std_days is empty when n < 2.
std::string summary_csv_text(const EnsembleSummary& summary);

/// Per-line box summaries:
/// `line_id,q1,median,q3,whisker_low,whisker_high,n_outliers`.
std::string box_stats_csv_text(const std::map<std::string, BoxStats>& by_line);

}  // namespace gridrte
