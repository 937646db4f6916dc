#include "gridrte/stats.hpp"

#include <algorithm>
#include <cmath>

#include "gridrte/errors.hpp"

namespace gridrte {

namespace {

SeriesStats series_stats(std::vector<double> totals) {
    SeriesStats s;
    s.n = static_cast<std::int64_t>(totals.size());
    double sum = 0.0;
    for (double v : totals) {
        sum += v;
    }
    s.mean = sum / static_cast<double>(s.n);
    if (s.n >= 2) {
        double ss = 0.0;
        for (double v : totals) {
            double d = v - s.mean;
            ss += d * d;
        }
        s.sample_std = std::sqrt(ss / static_cast<double>(s.n - 1));
    }
    s.totals = std::move(totals);
    return s;
}

}  // namespace

EnsembleSummary aggregate(const std::vector<RteReport>& reports) {
    if (reports.empty()) {
        throw EmptyEnsemble("cannot aggregate an empty ensemble");
    }
    const std::string* network_fp = nullptr;
    const std::string* params_fp = nullptr;
    for (const RteReport& r : reports) {
        if (!r.network_fingerprint.empty()) {
            if (network_fp != nullptr && *network_fp != r.network_fingerprint) {
                throw FingerprintMismatch("reports mix network fingerprints " + *network_fp +
                                          " and " + r.network_fingerprint);
            }
            network_fp = &r.network_fingerprint;
        }
        if (!r.params_fingerprint.empty()) {
            if (params_fp != nullptr && *params_fp != r.params_fingerprint) {
                throw FingerprintMismatch("reports mix parameter fingerprints " + *params_fp +
                                          " and " + r.params_fingerprint);
            }
            params_fp = &r.params_fingerprint;
        }
    }

    // Scenario order, not input order, drives every series: permuting the
    // report list cannot change any output.
    std::vector<const RteReport*> ordered;
    ordered.reserve(reports.size());
    for (const RteReport& r : reports) {
        ordered.push_back(&r);
    }
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const RteReport* a, const RteReport* b) {
                         return a->scenario_index < b->scenario_index;
                     });

    EnsembleSummary summary;
    std::vector<double> cumulative;
    cumulative.reserve(reports.size());
    std::map<AssetType, std::vector<double>> per_asset;
    for (const RteReport* r : ordered) {
        cumulative.push_back(r->total);
        for (const auto& [asset, value] : r->per_asset_type) {
            per_asset[asset].push_back(value);
        }
    }
    for (auto& [asset, totals] : per_asset) {
        if (totals.size() != reports.size()) {
            throw FingerprintMismatch(
                "reports disagree on asset-type coverage; were they produced from "
                "the same network?");
        }
        summary.per_asset_type.emplace(asset, series_stats(std::move(totals)));
    }
    summary.cumulative = series_stats(std::move(cumulative));
    return summary;
}

BoxStats box_stats(std::vector<double> values) {
    if (values.empty()) {
        throw EmptyInput("box_stats needs at least one value");
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();

    // Quartile at position p*(n-1), linearly interpolated between the
    // bracketing order statistics.
    auto quantile = [&](double p) {
        double pos = p * static_cast<double>(n - 1);
        std::size_t lo = static_cast<std::size_t>(pos);
        if (lo + 1 >= n) {
            return values[n - 1];
        }
        double frac = pos - static_cast<double>(lo);
        return values[lo] + frac * (values[lo + 1] - values[lo]);
    };

    BoxStats box;
    box.q1 = quantile(0.25);
    box.median = quantile(0.5);
    box.q3 = quantile(0.75);
    double iqr = box.q3 - box.q1;
    double lo_fence = box.q1 - 1.5 * iqr;
    double hi_fence = box.q3 + 1.5 * iqr;

    // Whiskers are the extreme data points inside the fences. At least one
    // point always lies inside (the lower median bracket), so these loops
    // terminate on data.
    std::size_t first_in = 0;
    while (values[first_in] < lo_fence) {
        ++first_in;
    }
    std::size_t last_in = n - 1;
    while (values[last_in] > hi_fence) {
        --last_in;
    }
    box.whisker_low = values[first_in];
    box.whisker_high = values[last_in];
    for (std::size_t i = 0; i < first_in; ++i) {
        box.outliers.push_back(values[i]);
    }
    for (std::size_t i = last_in + 1; i < n; ++i) {
        box.outliers.push_back(values[i]);
    }
    return box;
}

std::map<std::string, BoxStats> per_line_distribution(const std::vector<RteReport>& reports) {
    if (reports.empty()) {
        throw EmptyEnsemble("cannot compute per-line distributions for an empty ensemble");
    }
    std::vector<const RteReport*> ordered;
    ordered.reserve(reports.size());
    for (const RteReport& r : reports) {
        ordered.push_back(&r);
    }
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const RteReport* a, const RteReport* b) {
                         return a->scenario_index < b->scenario_index;
                     });
    std::map<std::string, std::vector<double>> values;
    for (const RteReport* r : ordered) {
        for (const auto& [line_id, value] : r->per_line) {
            values[line_id].push_back(value);
        }
    }
    std::map<std::string, BoxStats> out;
    for (auto& [line_id, series] : values) {
        // A line missing from some report means mismatched inputs upstream;
        // pad with zeros rather than dropping scenarios.
        series.resize(reports.size(), 0.0);
        out.emplace(line_id, box_stats(std::move(series)));
    }
    return out;
}

}  // namespace gridrte
