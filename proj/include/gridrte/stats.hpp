#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridrte/rte.hpp"

namespace gridrte {

/// Mean / sample standard deviation of one series of per-scenario totals.
/// sample_std is absent when fewer than two scenarios were aggregated.
struct SeriesStats {
    std::int64_t n = 0;
    double mean = 0.0;
    std::optional<double> sample_std;
    std::vector<double> totals;  // per-scenario values, in scenario order
};

struct EnsembleSummary {
    std::map<AssetType, SeriesStats> per_asset_type;
    SeriesStats cumulative;
};

/// Five-number box summary with 1.5*IQR whiskers. Whiskers are actual data
/// points; everything beyond the fences is listed in outliers.
struct BoxStats {
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double whisker_low = 0.0;
    double whisker_high = 0.0;
    std::vector<double> outliers;
};

/// Ensemble mean/std per asset type and cumulative. Reports must share
/// provenance: mismatched non-empty fingerprints raise FingerprintMismatch.
/// Throws EmptyEnsemble on no reports.
EnsembleSummary aggregate(const std::vector<RteReport>& reports);

/// Quartiles by linear interpolation at position p*(n-1) on the sorted
/// sample. Throws EmptyInput on an empty vector.
BoxStats box_stats(std::vector<double> values);

/// Box summary of each line's per-scenario recovery estimate. Lines that
/// never fail contribute zeros, not missing values.
std::map<std::string, BoxStats> per_line_distribution(const std::vector<RteReport>& reports);

}  // namespace gridrte
