#pragma once

#include <filesystem>
#include <string>

#include "gridrte/rte.hpp"

#include "json.hpp"

namespace gridrte {

nlohmann::json parameters_to_json(const RteParameters& params);
RteParameters parameters_from_json(const nlohmann::json& doc);

/// Loads and validates; throws ParseError / ValidationError.
RteParameters load_parameters(const std::filesystem::path& path);
void save_parameters(const RteParameters& params, const std::filesystem::path& path);

/// Canonical serialization used for fingerprinting.
std::string canonical_parameters_text(const RteParameters& params);

}  // namespace gridrte
