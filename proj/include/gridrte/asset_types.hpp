#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

namespace gridrte {

/// Asset categories known to the model. The on-disk names are stable
/// identifiers; adding a new asset type means extending these enums and
/// the name tables together.
enum class AssetType : std::uint8_t {
    TransmissionTower,
    Substation,
};

enum class FailureMode : std::uint8_t {
    HurricaneWind,
    Flood,
};

std::string_view to_string(AssetType a);
std::string_view to_string(FailureMode f);
std::optional<AssetType> asset_type_from_string(std::string_view s);
std::optional<FailureMode> failure_mode_from_string(std::string_view s);

/// The single failure mode each asset type is exposed to in this version.
/// The scenario and parameter schemas already carry explicit (asset, mode)
/// pairs, so widening this to a set is a data change, not a format change.
FailureMode failure_mode_for(AssetType a);

/// Identifies one (asset type, component, failure mode) slot in a scenario.
/// Ordering is lexicographic on the stable names so that every serialized
/// artifact lists entries in the same byte order.
struct ComponentKey {
    AssetType asset_type;
    std::string component_id;
    FailureMode failure_mode;

    friend auto operator<=>(const ComponentKey& lhs, const ComponentKey& rhs) {
        return std::tuple(to_string(lhs.asset_type), std::string_view(lhs.component_id),
                          to_string(lhs.failure_mode)) <=>
               std::tuple(to_string(rhs.asset_type), std::string_view(rhs.component_id),
                          to_string(rhs.failure_mode));
    }
    friend bool operator==(const ComponentKey& lhs, const ComponentKey& rhs) {
        return (lhs <=> rhs) == 0;
    }
};

std::string to_string(const ComponentKey& key);

}  // namespace gridrte
