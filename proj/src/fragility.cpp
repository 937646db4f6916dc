#include "gridrte/fragility.hpp"

namespace gridrte {

std::vector<Violation> validate_curve(const FragilityCurve& curve) {
    std::vector<Violation> out;
    if (curve.knots.empty()) {
        out.push_back({"empty_curve", curve.id, "fragility curve '" + curve.id + "' has no knots"});
        return out;
    }
    for (std::size_t i = 0; i < curve.knots.size(); ++i) {
        const auto& k = curve.knots[i];
        if (!(k.probability >= 0.0 && k.probability <= 1.0)) {
            out.push_back({"range", curve.id,
                           "fragility curve '" + curve.id + "' knot " + std::to_string(i) +
                               " probability must be in [0,1]"});
        }
        if (i > 0) {
            if (!(curve.knots[i - 1].intensity < k.intensity)) {
                out.push_back({"curve_order", curve.id,
                               "fragility curve '" + curve.id +
                                   "' intensities must be strictly increasing at knot " +
                                   std::to_string(i)});
            }
            if (curve.knots[i - 1].probability > k.probability) {
                out.push_back({"curve_monotonicity", curve.id,
                               "fragility curve '" + curve.id +
                                   "' probabilities must be non-decreasing at knot " +
                                   std::to_string(i)});
            }
        }
    }
    return out;
}

double failure_probability(const FragilityCurve& curve, double intensity) {
    const auto& knots = curve.knots;
    if (intensity <= knots.front().intensity) {
        return knots.front().probability;
    }
    if (intensity >= knots.back().intensity) {
        return knots.back().probability;
    }
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (intensity <= knots[i].intensity) {
            const auto& lo = knots[i - 1];
            const auto& hi = knots[i];
            double t = (intensity - lo.intensity) / (hi.intensity - lo.intensity);
            return lo.probability + t * (hi.probability - lo.probability);
        }
    }
    return knots.back().probability;  // unreachable for a valid curve
}

}  // namespace gridrte
