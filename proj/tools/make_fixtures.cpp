// Regenerates the synthetic network fixtures shipped under fixtures/.
// Generation is fully deterministic, so reruns reproduce the committed
// files byte for byte. Usage: make_fixtures [output_dir]
//
// The large fixture mimics the scale of a hurricane study on an
// island-sized grid: ~300 substations and ~500 lines averaging ~50 towers,
// with failure probabilities tuned so the analytic expected cumulative
// recovery estimate lands near 27,500 work-crew days, transmission
// dominating and substations contributing a couple hundred days. One line
// is deliberately long and fragile so that per-line distributions show a
// dominant outlier around 2,000 work-crew days.

#include <cinttypes>
#include <cstdio>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>

#include "gridrte/fingerprint.hpp"
#include "gridrte/network_io.hpp"
#include "gridrte/params_io.hpp"
#include "gridrte/rte.hpp"
#include "gridrte/sampling.hpp"

namespace {

using namespace gridrte;

struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) {
        return lo + static_cast<double>(next() >> 11) * 0x1.0p-53 * (hi - lo);
    }
    // Round to 3 decimals so fixture files stay readable.
    double uniform3(double lo, double hi) {
        return std::round(uniform(lo, hi) * 1000.0) / 1000.0;
    }
};

std::string zpad(const char* prefix, int width, std::int64_t n) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%0*" PRId64, prefix, width, n);
    return buf;
}

Network make_longline_network() {
    Network net;
    TransmissionLine line;
    line.id = "L1";
    line.from_bus = "B1";
    line.to_bus = "B2";
    line.nominal_kv = 115.0;
    for (int i = 0; i < 200; ++i) {
        Tower t;
        t.id = zpad("T", 3, i);
        t.line_id = "L1";
        t.terrain_slope = 5.0;
        t.nominal_kv = 115.0;
        t.hazard.failure_probability = 1.0;
        line.tower_ids.push_back(t.id);
        net.towers.push_back(std::move(t));
    }
    net.lines.push_back(std::move(line));
    return net;
}

// 100 components with direct probabilities; used for expectation-identity
// checks, so every probability sits strictly inside (0, 1).
Network make_expectation_network() {
    Network net;
    SplitMix rng(0x45585045ULL);  // "EXPE"

    const int n_lines = 6;
    const int towers_per_line = 10;
    for (int li = 0; li < n_lines; ++li) {
        TransmissionLine line;
        line.id = zpad("L", 2, li);
        line.from_bus = zpad("B", 3, li);
        line.to_bus = zpad("B", 3, li + 1);
        line.nominal_kv = (li % 3 == 0) ? 230.0 : (li % 3 == 1 ? 138.0 : 115.0);
        for (int ti = 0; ti < towers_per_line; ++ti) {
            Tower t;
            t.id = zpad("T", 3, li * towers_per_line + ti);
            t.line_id = line.id;
            t.nominal_kv = line.nominal_kv;
            t.terrain_slope = rng.uniform3(0.0, 55.0);
            t.hazard.failure_probability = rng.uniform3(0.05, 0.9);
            line.tower_ids.push_back(t.id);
            net.towers.push_back(std::move(t));
        }
        net.lines.push_back(std::move(line));
    }
    for (int si = 0; si < 40; ++si) {
        Substation s;
        s.id = zpad("S", 3, si);
        s.bus_id = zpad("B", 3, si);
        s.nominal_kv = (si % 2 == 0) ? 115.0 : 230.0;
        s.hazard.failure_probability = rng.uniform3(0.05, 0.9);
        net.substations.push_back(std::move(s));
    }
    return net;
}

Network make_maria_scale_network() {
    Network net;
    SplitMix rng(0x4D415249ULL);  // "MARI"

    FragilityCurve wind;
    wind.id = "wind_lattice_tower";
    wind.knots = {{20.0, 0.0}, {35.0, 0.04}, {62.0, 0.148}, {95.0, 0.55}, {120.0, 0.9}};
    net.fragility_curves.emplace(wind.id, wind);

    FragilityCurve flood;
    flood.id = "flood_substation";
    flood.knots = {{0.0, 0.0}, {0.4, 0.012}, {2.9, 0.071}, {5.0, 0.2}, {8.0, 0.45}};
    net.fragility_curves.emplace(flood.id, flood);

    for (int si = 0; si < 300; ++si) {
        Substation s;
        s.id = zpad("S", 4, si);
        s.bus_id = zpad("B", 4, si);
        s.nominal_kv = rng.uniform(0.0, 1.0) < 0.7 ? 115.0 : 230.0;
        if (si % 2 == 0) {
            s.hazard.failure_probability = rng.uniform3(0.015, 0.07);
        } else {
            s.hazard.fragility_curve_id = flood.id;
            // Depths spanning the 0.4..2.9 m segment, i.e. p in ~[0.015, 0.07].
            s.hazard.hazard_intensity = rng.uniform3(0.53, 2.86);
        }
        net.substations.push_back(std::move(s));
    }

    std::int64_t tower_counter = 0;
    for (int li = 0; li < 500; ++li) {
        TransmissionLine line;
        line.id = zpad("L", 4, li);
        line.from_bus = zpad("B", 4, li % 300);
        line.to_bus = zpad("B", 4, (li * 7 + 13) % 300);
        const bool long_fragile = li == 0;
        line.nominal_kv =
            long_fragile ? 115.0 : (rng.uniform(0.0, 1.0) < 0.75 ? 115.0 : 230.0);
        const int n_towers = long_fragile ? 200 : 50;
        for (int ti = 0; ti < n_towers; ++ti) {
            Tower t;
            t.id = zpad("T", 5, tower_counter++);
            t.line_id = line.id;
            t.nominal_kv = line.nominal_kv;
            if (long_fragile) {
                t.terrain_slope = rng.uniform3(2.0, 20.0);
                t.hazard.failure_probability = 0.97;
            } else {
                double band = rng.uniform(0.0, 1.0);
                if (band < 0.60) {
                    t.terrain_slope = rng.uniform3(0.0, 24.9);
                } else if (band < 0.85) {
                    t.terrain_slope = rng.uniform3(25.0, 34.9);
                } else {
                    t.terrain_slope = rng.uniform3(35.0, 60.0);
                }
                if (rng.uniform(0.0, 1.0) < 0.6) {
                    t.hazard.fragility_curve_id = wind.id;
                    // Winds spanning the 35..62 m/s segment: p in [0.04, 0.148].
                    t.hazard.hazard_intensity = rng.uniform3(35.0, 62.0);
                } else {
                    t.hazard.failure_probability = rng.uniform3(0.04, 0.148);
                }
            }
            line.tower_ids.push_back(t.id);
            net.towers.push_back(std::move(t));
        }
        net.lines.push_back(std::move(line));
    }
    return net;
}

void report_analytics(const char* name, const Network& net) {
    RteParameters params = default_parameters();
    ProbabilityMap probs = component_failure_probabilities(net);

    std::map<std::string, const Tower*> towers;
    for (const auto& t : net.towers) {
        towers.emplace(t.id, &t);
    }
    std::map<std::string, const Substation*> subs;
    for (const auto& s : net.substations) {
        subs.emplace(s.id, &s);
    }

    double mean = 0.0;
    double variance = 0.0;
    double mean_towers = 0.0;
    double mean_subs = 0.0;
    for (const auto& [key, p] : probs) {
        double term = 0.0;
        if (key.asset_type == AssetType::TransmissionTower) {
            const Tower* t = towers.at(key.component_id);
            term = component_term(key.asset_type, key.component_id, t->terrain_slope,
                                  t->nominal_kv, key.failure_mode, true, params);
            mean_towers += p * term;
        } else {
            const Substation* s = subs.at(key.component_id);
            term = component_term(key.asset_type, key.component_id, 0.0, s->nominal_kv,
                                  key.failure_mode, true, params);
            mean_subs += p * term;
        }
        mean += p * term;
        variance += p * (1.0 - p) * term * term;
    }
    std::cout << name << ": components=" << probs.size() << " E[RTE]=" << mean
              << " (towers " << mean_towers << ", substations " << mean_subs << ")"
              << " sd=" << std::sqrt(variance) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path out_dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(out_dir);

    save_parameters(default_parameters(), out_dir / "default_params.json");

    Network longline = make_longline_network();
    require_valid(longline);
    save_network(longline, out_dir / "longline_network.json");

    Network expectation = make_expectation_network();
    require_valid(expectation);
    save_network(expectation, out_dir / "expectation_network.json");
    report_analytics("expectation_network", expectation);

    Network maria = make_maria_scale_network();
    require_valid(maria);
    save_network(maria, out_dir / "maria_scale_network.json");
    report_analytics("maria_scale_network", maria);

    std::cout << "fixtures written to " << out_dir.string() << "\n";
    return 0;
}
