// Acceptance suite: end-to-end checks of the shipped artifact, one
// printed PASS/FAIL line per criterion. Exits non-zero if any criterion
// fails. Criteria with runtime budgets measure and report wall time.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "gridrte/commands.hpp"
#include "gridrte/fingerprint.hpp"
#include "gridrte/network_io.hpp"
#include "gridrte/params_io.hpp"
#include "gridrte/report_io.hpp"
#include "gridrte/rte.hpp"
#include "gridrte/sampling.hpp"
#include "gridrte/scenario_io.hpp"
#include "gridrte/stats.hpp"
#include "gridrte/text.hpp"

#include "json.hpp"

#include "oracles.hpp"
#include "support.hpp"

using namespace gridrte;
using testsupport::fixture_path;
using testsupport::make_temp_dir;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        throw std::runtime_error(what);
    }
}

void criterion(int id, const std::string& label, const std::function<std::string()>& body) {
    try {
        std::string note = body();
        std::cout << "[PASS] criterion " << id << ": " << label;
        if (!note.empty()) {
            std::cout << " (" << note << ")";
        }
        std::cout << "\n";
    } catch (const std::exception& e) {
        ++g_failures;
        std::cout << "[FAIL] criterion " << id << ": " << label << " -- " << e.what() << "\n";
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(GRIDRTE_CLI_PATH) + " " + args;
    int status = std::system(cmd.c_str());
    if (status == -1) {
        return -1;
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

/// Byte-compare two output trees; manifest.json is compared with its
/// created_utc timestamp masked out.
void compare_trees(const std::filesystem::path& a, const std::filesystem::path& b) {
    auto collect = [](const std::filesystem::path& root) {
        std::map<std::string, std::filesystem::path> files;
        for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
            if (entry.is_regular_file()) {
                files.emplace(std::filesystem::relative(entry.path(), root).string(),
                              entry.path());
            }
        }
        return files;
    };
    auto fa = collect(a);
    auto fb = collect(b);
    check(fa.size() == fb.size(), "trees differ in file count");
    for (const auto& [rel, path_a] : fa) {
        auto it = fb.find(rel);
        check(it != fb.end(), "missing file in second tree: " + rel);
        std::string ca = read_text_file(path_a);
        std::string cb = read_text_file(it->second);
        if (std::filesystem::path(rel).filename() == "manifest.json") {
            nlohmann::json ja = nlohmann::json::parse(ca);
            nlohmann::json jb = nlohmann::json::parse(cb);
            ja.erase("created_utc");
            jb.erase("created_utc");
            check(ja == jb, "manifests differ beyond timestamps: " + rel);
        } else {
            check(ca == cb, "file differs: " + rel);
        }
    }
}

Scenario sampled_all_fail(const Network& net) {
    return sample_scenario(component_failure_probabilities(net), 1, 0);
}

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << " s";
    return out.str();
}

// --- criteria ---------------------------------------------------------

std::string oracle_equivalence() {
    auto start = std::chrono::steady_clock::now();
    testsupport::TestRng rng(101);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        Network net = testsupport::random_network(rng, 30);
        RteParameters params = testsupport::random_parameters(rng);
        if (!net.towers.empty() && rng.chance(0.25)) {
            params.extra_multipliers[net.towers[0].id] = rng.uniform(0.0, 3.0);
        }
        Scenario s = testsupport::random_scenario(net, rng, rng.uniform(0.0, 1.0));

        int failed_towers = 0;
        int failed_subs = 0;
        for (const auto& [key, x] : s.indicators) {
            if (x) {
                (key.asset_type == AssetType::TransmissionTower ? failed_towers : failed_subs)++;
            }
        }
        params.work_crews[{AssetType::TransmissionTower, FailureMode::HurricaneWind}] =
            rng.uniform_int(1, std::max(1, failed_towers));
        params.work_crews[{AssetType::Substation, FailureMode::Flood}] =
            rng.uniform_int(1, std::max(1, failed_subs));

        double got = scenario_rte(net, s, params).total;
        double want = oracle::naive_rte_total(net, s, params);
        worst = std::max(worst, std::abs(got - want));
    }
    double elapsed = seconds_since(start);
    check(worst <= 1e-9, "worst deviation " + format_double(worst) + " exceeds 1e-9");
    check(elapsed < 5.0, "took " + fmt_seconds(elapsed) + ", budget 5 s");
    return "1000 networks, worst |diff| " + format_double(worst) + ", " + fmt_seconds(elapsed);
}

std::string boundary_exactness() {
    RteParameters p = default_parameters();
    struct SlopeCase {
        double slope;
        double want;
    };
    for (SlopeCase c : std::initializer_list<SlopeCase>{
             {10.0, 1.0}, {24.999, 1.0}, {25.0, 1.05}, {34.999, 1.05}, {35.0, 1.1}, {90.0, 1.1}}) {
        double got = loc_multiplier(AssetType::TransmissionTower, c.slope, p);
        check(got == c.want, "slope " + format_double(c.slope) + " -> " + format_double(got) +
                                 ", want " + format_double(c.want));
    }
    check(loc_multiplier(AssetType::Substation, 45.0, p) == 1.0, "substation Loc must be 1.0");
    struct KvCase {
        double kv;
        double want;
    };
    for (KvCase c : std::initializer_list<KvCase>{
             {115.0, 1.0}, {137.9, 1.0}, {138.0, 1.2}, {230.0, 1.2}}) {
        double got = tech_multiplier(c.kv, p);
        check(got == c.want, format_double(c.kv) + " kV -> " + format_double(got) + ", want " +
                                 format_double(c.want));
    }
    return "";
}

std::string worked_examples() {
    RteParameters params = default_parameters();

    Network threecomp = load_network(fixture_path("threecomp_network.json"));
    Scenario s3 = sampled_all_fail(threecomp);
    double total = scenario_rte(threecomp, s3, params).total;
    check(total == 35.0, "3-component fixture gave " + format_double(total) + ", want 35");

    RteParameters two_crews = params;
    two_crews.work_crews[{AssetType::TransmissionTower, FailureMode::HurricaneWind}] = 2;
    double total2 = scenario_rte(threecomp, s3, two_crews).total;
    check(total2 == 25.0, "WC(tower)=2 gave " + format_double(total2) + ", want 25");

    Network longline = load_network(fixture_path("longline_network.json"));
    Scenario sl = sampled_all_fail(longline);
    double total200 = scenario_rte(longline, sl, params).total;
    check(total200 == 2000.0, "200-tower line gave " + format_double(total200) + ", want 2000");
    return "";
}

std::string sampling_convergence() {
    auto start = std::chrono::steady_clock::now();
    ProbabilityMap probs;
    probs.emplace(ComponentKey{AssetType::TransmissionTower, "T1", FailureMode::HurricaneWind},
                  0.5);
    const int n = 20000;
    int failures = 0;
    for (int i = 0; i < n; ++i) {
        Scenario s = sample_scenario(probs, 424242, i);
        failures += s.indicators.begin()->second ? 1 : 0;
    }
    double freq = static_cast<double>(failures) / n;
    double elapsed = seconds_since(start);
    check(std::abs(freq - 0.5) <= 0.0106,
          "empirical frequency " + format_double(freq) + " outside 0.5 +/- 0.0106");
    check(elapsed < 2.0, "took " + fmt_seconds(elapsed) + ", budget 2 s");
    return "frequency " + format_double(freq) + ", " + fmt_seconds(elapsed);
}

std::string expectation_identity() {
    Network net = load_network(fixture_path("expectation_network.json"));
    check(net.towers.size() + net.substations.size() == 100, "fixture must have 100 components");
    RteParameters params = default_parameters();
    ProbabilityMap probs = component_failure_probabilities(net);
    auto identity = oracle::expectation_identity(net, probs, params);

    const std::int64_t n = 5000;
    std::vector<Scenario> scenarios = sample_ensemble(probs, 31337, n, 4);
    double sum = 0.0;
    for (const Scenario& s : scenarios) {
        sum += scenario_rte(net, s, params).total;
    }
    double mean = sum / static_cast<double>(n);
    double sigma_mean = std::sqrt(identity.variance / static_cast<double>(n));
    check(std::abs(mean - identity.mean) <= 3.0 * sigma_mean,
          "mean " + format_double(mean) + " outside " + format_double(identity.mean) + " +/- " +
              format_double(3.0 * sigma_mean));
    return "mean " + format_double(mean) + " vs analytic " + format_double(identity.mean) +
           " +/- " + format_double(3.0 * sigma_mean);
}

std::string determinism_under_workers() {
    auto base = make_temp_dir("accept_det");
    std::string network = fixture_path("maria_scale_network.json").string();
    for (const char* sub : {"a", "b", "c"}) {
        std::filesystem::create_directories(base / sub);
    }
    std::string common = "run --network " + network + " --seed 1 --scenarios 20 --out ";
    check(run_cli(common + (base / "a").string() + " --workers 1") == 0, "first run failed");
    check(run_cli(common + (base / "b").string() + " --workers 1") == 0, "second run failed");
    check(run_cli(common + (base / "c").string() + " --workers 8") == 0, "workers=8 run failed");
    compare_trees(base / "a", base / "b");
    compare_trees(base / "a", base / "c");
    std::filesystem::remove_all(base);
    return "identical trees for rerun and workers 1 vs 8";
}

std::string maria_scale_study() {
    Network net = load_network(fixture_path("maria_scale_network.json"));
    check(net.substations.size() >= 250 && net.substations.size() <= 350,
          "substation count out of range");
    check(net.lines.size() >= 450 && net.lines.size() <= 550, "line count out of range");
    check(net.towers.size() >= 20000, "tower count out of range");

    RteParameters params = default_parameters();
    ProbabilityMap probs = component_failure_probabilities(net);
    auto identity = oracle::expectation_identity(net, probs, params);
    check(identity.mean > 26000.0 && identity.mean < 29000.0,
          "analytic E[RTE] " + format_double(identity.mean) + " not at the published magnitude");

    auto out = make_temp_dir("accept_maria");
    auto start = std::chrono::steady_clock::now();
    RunOptions opt;
    opt.network_path = fixture_path("maria_scale_network.json");
    opt.seed = 1;
    opt.n_scenarios = 20;
    opt.out_dir = out;
    opt.workers = 4;
    cmd_run(opt);
    double elapsed = seconds_since(start);
    check(elapsed < 10.0, "pipeline took " + fmt_seconds(elapsed) + ", budget 10 s");

    // Exact Table-5 row shape, read back from the file.
    std::string summary = read_text_file(out / "summary.csv");
    std::vector<std::string> lines;
    std::stringstream ss(summary);
    for (std::string line; std::getline(ss, line);) {
        lines.push_back(line);
    }
    check(lines.size() == 4, "summary must have header plus exactly three rows");
    check(lines[0] == "component,n,mean_days,std_days", "unexpected summary header");
    check(lines[1].starts_with("Transmission,20,"), "row 1 must be Transmission with n=20");
    check(lines[2].starts_with("Substation,20,"), "row 2 must be Substation with n=20");
    check(lines[3].starts_with("Cumulative,20,"), "row 3 must be Cumulative with n=20");

    auto mean_of = [&](const std::string& line) {
        auto fields = split_csv_line(line);
        return parse_double(fields[2], "mean_days");
    };
    double trans_mean = mean_of(lines[1]);
    double sub_mean = mean_of(lines[2]);
    double cum_mean = mean_of(lines[3]);
    check(std::abs(cum_mean - (trans_mean + sub_mean)) <= 1e-9,
          "cumulative mean is not additive to 1e-9");

    double sigma_mean = std::sqrt(identity.variance / 20.0);
    check(std::abs(cum_mean - identity.mean) <= 3.0 * sigma_mean,
          "reported mean " + format_double(cum_mean) + " outside analytic band " +
              format_double(identity.mean) + " +/- " + format_double(3.0 * sigma_mean));
    std::filesystem::remove_all(out);
    return "mean " + format_double(cum_mean) + " vs analytic " + format_double(identity.mean) +
           " +/- " + format_double(3.0 * sigma_mean) + ", " + fmt_seconds(elapsed);
}

std::string box_stats_oracle() {
    BoxStats b = box_stats({1, 2, 3, 4, 5});
    check(b.q1 == 2.0 && b.median == 3.0 && b.q3 == 4.0 && b.whisker_low == 1.0 &&
              b.whisker_high == 5.0 && b.outliers.empty(),
          "hand example 1..5 failed");
    b = box_stats({5, 5, 5});
    check(b.q1 == 5.0 && b.median == 5.0 && b.q3 == 5.0 && b.outliers.empty(),
          "hand example 5,5,5 failed");
    b = box_stats({1, 2, 3, 4, 100});
    check(b.q3 == 4.0 && b.whisker_high == 4.0 && b.outliers == std::vector<double>{100.0},
          "hand example 1,2,3,4,100 failed");

    testsupport::TestRng rng(103);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = rng.uniform_int(1, 200);
        std::vector<double> values;
        for (int i = 0; i < n; ++i) {
            double v = rng.uniform(0.0, 1000.0);
            if (rng.chance(0.04)) {
                v *= rng.uniform(3.0, 40.0);
            }
            values.push_back(v);
        }
        BoxStats got = box_stats(values);
        oracle::NaiveBox want = oracle::naive_box_stats(values);
        check(std::abs(got.q1 - want.q1) <= 1e-9 && std::abs(got.median - want.median) <= 1e-9 &&
                  std::abs(got.q3 - want.q3) <= 1e-9,
              "quartiles deviate beyond 1e-9");
        check(got.whisker_low == want.whisker_low && got.whisker_high == want.whisker_high,
              "whiskers disagree with the oracle");
        check(got.outliers == want.outliers, "outlier sets disagree");
    }
    return "1000 random vectors";
}

std::string hardening_monotonicity() {
    Network net = load_network(fixture_path("maria_scale_network.json"));
    RteParameters params = default_parameters();

    HardeningSpec identity_spec;
    identity_spec.actions.push_back({std::nullopt, std::nullopt, AssetType::TransmissionTower,
                                     1.0});
    HardenResult identity = harden_compare(net, identity_spec, params, 5, 20, 4);
    for (const auto& d : identity.per_scenario) {
        check(d.delta_days == 0.0, "identity hardening produced a non-zero delta");
    }

    testsupport::TestRng rng(107);
    const std::vector<std::string> prefixes = {"T0", "T1", "T00", "S0", "T", "S"};
    for (int spec_no = 0; spec_no < 10; ++spec_no) {
        HardeningSpec spec;
        int n_actions = rng.uniform_int(1, 3);
        for (int a = 0; a < n_actions; ++a) {
            HardeningAction action;
            double kind = rng.uniform(0.0, 1.0);
            if (kind < 0.4) {
                action.asset_type = rng.chance(0.5) ? AssetType::TransmissionTower
                                                    : AssetType::Substation;
            } else if (kind < 0.8) {
                action.id_prefix = prefixes[static_cast<std::size_t>(
                    rng.uniform_int(0, static_cast<int>(prefixes.size()) - 1))];
            } else {
                action.id = net.towers[static_cast<std::size_t>(
                                           rng.uniform_int(0, static_cast<int>(
                                                                  net.towers.size()) -
                                                                  1))]
                                .id;
            }
            action.factor = rng.uniform(0.0, 1.0);
            spec.actions.push_back(std::move(action));
        }
        HardenResult result =
            harden_compare(net, spec, params, 1000 + static_cast<std::uint64_t>(spec_no), 20, 4);
        check(result.per_scenario.size() == 20, "expected 20 paired scenarios");
        for (const auto& d : result.per_scenario) {
            check(d.hardened_days <= d.baseline_days,
                  "scenario " + std::to_string(d.scenario_index) + " hardened total " +
                      format_double(d.hardened_days) + " exceeds baseline " +
                      format_double(d.baseline_days));
        }
    }
    return "10 random specs, all per-scenario deltas >= 0";
}

}  // namespace

int main() {
    std::cout << "gridrte acceptance suite\n";
    criterion(1, "recovery totals match the direct-evaluation oracle", oracle_equivalence);
    criterion(2, "slope and voltage thresholds map exactly", boundary_exactness);
    criterion(3, "worked examples: 35 / 25 / 2000 work-crew days", worked_examples);
    criterion(4, "sampled failure frequency converges at p=0.5", sampling_convergence);
    criterion(5, "ensemble mean matches the analytic expectation", expectation_identity);
    criterion(6, "full runs are byte-identical across reruns and worker counts",
              determinism_under_workers);
    criterion(7, "synthetic hurricane-scale study lands in the analytic band",
              maria_scale_study);
    criterion(8, "box statistics match the sort-based oracle", box_stats_oracle);
    criterion(9, "hardening never increases any scenario total under common random numbers",
              hardening_monotonicity);

    if (g_failures != 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
