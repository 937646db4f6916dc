#include "doctest.h"

#include <cmath>

#include "gridrte/network_io.hpp"
#include "gridrte/sampling.hpp"

#include "support.hpp"

using namespace gridrte;
using testsupport::fixture_path;

namespace {

ComponentKey tower_key(const std::string& id) {
    return {AssetType::TransmissionTower, id, FailureMode::HurricaneWind};
}

}  // namespace

TEST_CASE("direct probabilities pass through, intensities go through the curve") {
    Network net;
    FragilityCurve curve{"c", {{50.0, 0.2}, {100.0, 0.8}}};
    net.fragility_curves.emplace("c", curve);
    Substation s;
    s.id = "S1";
    s.bus_id = "B1";
    s.nominal_kv = 115.0;
    s.hazard.failure_probability = 0.4;
    net.substations.push_back(s);
    TransmissionLine line{"L1", "B1", "B2", 115.0, {"T1"}};
    net.lines.push_back(line);
    Tower t;
    t.id = "T1";
    t.line_id = "L1";
    t.nominal_kv = 115.0;
    t.terrain_slope = 5.0;
    t.hazard.fragility_curve_id = "c";
    t.hazard.hazard_intensity = 75.0;
    net.towers.push_back(t);

    ProbabilityMap probs = component_failure_probabilities(net);
    REQUIRE(probs.size() == 2);
    CHECK(probs.at({AssetType::Substation, "S1", FailureMode::Flood}) == 0.4);
    CHECK(probs.at(tower_key("T1")) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("empty network maps to an empty probability map") {
    CHECK(component_failure_probabilities(Network{}).empty());
}

TEST_CASE("unknown curve id raises MissingCurve") {
    Network net;
    Tower t;
    t.id = "T1";
    t.line_id = "L1";
    t.hazard.fragility_curve_id = "nope";
    t.hazard.hazard_intensity = 1.0;
    net.towers.push_back(t);
    CHECK_THROWS_AS(component_failure_probabilities(net), MissingCurve);
}

TEST_CASE("probability endpoints are exact") {
    ProbabilityMap probs;
    for (int i = 0; i < 64; ++i) {
        probs.emplace(tower_key("T" + std::to_string(i)), i % 2 == 0 ? 0.0 : 1.0);
    }
    for (std::int64_t index : {0, 1, 17}) {
        Scenario s = sample_scenario(probs, 99, index);
        for (const auto& [key, x] : s.indicators) {
            bool is_one = probs.at(key) == 1.0;
            CHECK(x == is_one);
        }
    }
}

TEST_CASE("sampling is deterministic and order-independent") {
    Network net = load_network(fixture_path("expectation_network.json"));
    ProbabilityMap probs = component_failure_probabilities(net);

    auto a = sample_ensemble(probs, 1234, 20);
    auto b = sample_ensemble(probs, 1234, 20);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].scenario_index == static_cast<std::int64_t>(i));
        CHECK(a[i].indicators == b[i].indicators);
    }

    auto parallel = sample_ensemble(probs, 1234, 20, 8);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].indicators == parallel[i].indicators);
    }
}

TEST_CASE("neighboring seeds give different ensembles") {
    Network net = load_network(fixture_path("expectation_network.json"));
    ProbabilityMap probs = component_failure_probabilities(net);
    REQUIRE(probs.size() >= 50);
    for (std::uint64_t seed : {1ULL, 42ULL, 900ULL}) {
        Scenario a = sample_scenario(probs, seed, 0);
        Scenario b = sample_scenario(probs, seed + 1, 0);
        CHECK(a.indicators != b.indicators);
    }
}

TEST_CASE("reducing probabilities never flips a component to failed") {
    Network net = load_network(fixture_path("expectation_network.json"));
    ProbabilityMap probs = component_failure_probabilities(net);
    testsupport::TestRng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        ProbabilityMap reduced = probs;
        for (auto& [key, p] : reduced) {
            p *= rng.uniform(0.0, 1.0);
        }
        std::uint64_t seed = static_cast<std::uint64_t>(trial) * 77 + 3;
        Scenario base = sample_scenario(probs, seed, trial);
        Scenario hard = sample_scenario(reduced, seed, trial);
        for (const auto& [key, x] : hard.indicators) {
            if (x) {
                CHECK(base.indicators.at(key));
            }
        }
    }
}

TEST_CASE("long-run failure frequency converges to the probability") {
    ProbabilityMap probs;
    probs.emplace(tower_key("T1"), 0.5);
    const int n = 20000;
    int failures = 0;
    for (int i = 0; i < n; ++i) {
        Scenario s = sample_scenario(probs, 2024, i);
        failures += s.indicators.at(tower_key("T1")) ? 1 : 0;
    }
    double freq = static_cast<double>(failures) / n;
    // 3-sigma binomial band around 0.5
    CHECK(freq > 0.5 - 0.0106);
    CHECK(freq < 0.5 + 0.0106);
}

TEST_CASE("scenario count must be positive") {
    CHECK_THROWS_AS(sample_ensemble({}, 1, 0), UsageError);
    CHECK_THROWS_AS(sample_ensemble({}, 1, -3), UsageError);
}

TEST_CASE("draws differ across scenario indices and component keys") {
    ComponentKey a = tower_key("T1");
    ComponentKey b = tower_key("T2");
    CHECK(uniform_draw(1, 0, a) != uniform_draw(1, 1, a));
    CHECK(uniform_draw(1, 0, a) != uniform_draw(1, 0, b));
    CHECK(uniform_draw(1, 0, a) == uniform_draw(1, 0, a));
    double u = uniform_draw(123, 456, a);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}
