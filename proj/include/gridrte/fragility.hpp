#pragma once

#include <string>
#include <vector>

#include "gridrte/errors.hpp"

namespace gridrte {

/// Monotone piecewise-linear map from hazard intensity (wind speed in m/s,
/// flood depth in m) to failure probability. Knots are strictly increasing
/// in intensity and non-decreasing in probability.
struct FragilityCurve {
    struct Knot {
        double intensity = 0.0;
        double probability = 0.0;
    };

    std::string id;
    std::vector<Knot> knots;
};

/// Curve-shape checks (used both standalone and from network validation).
std::vector<Violation> validate_curve(const FragilityCurve& curve);

/// Linear interpolation between bracketing knots; clamps to the first
/// knot's probability below the curve and the last knot's above it.
double failure_probability(const FragilityCurve& curve, double intensity);

}  // namespace gridrte
