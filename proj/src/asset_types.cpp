#include "gridrte/asset_types.hpp"

namespace gridrte {

std::string_view to_string(AssetType a) {
    switch (a) {
        case AssetType::TransmissionTower:
            return "transmission_tower";
        case AssetType::Substation:
            return "substation";
    }
    return "unknown";
}

std::string_view to_string(FailureMode f) {
    switch (f) {
        case FailureMode::HurricaneWind:
            return "hurricane_wind";
        case FailureMode::Flood:
            return "flood";
    }
    return "unknown";
}

std::optional<AssetType> asset_type_from_string(std::string_view s) {
    if (s == "transmission_tower") {
        return AssetType::TransmissionTower;
    }
    if (s == "substation") {
        return AssetType::Substation;
    }
    return std::nullopt;
}

std::optional<FailureMode> failure_mode_from_string(std::string_view s) {
    if (s == "hurricane_wind") {
        return FailureMode::HurricaneWind;
    }
    if (s == "flood") {
        return FailureMode::Flood;
    }
    return std::nullopt;
}

FailureMode failure_mode_for(AssetType a) {
    return a == AssetType::TransmissionTower ? FailureMode::HurricaneWind : FailureMode::Flood;
}

std::string to_string(const ComponentKey& key) {
    std::string out;
    out += to_string(key.asset_type);
    out += ':';
    out += key.component_id;
    out += ':';
    out += to_string(key.failure_mode);
    return out;
}

}  // namespace gridrte
