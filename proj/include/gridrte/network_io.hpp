#pragma once

#include <filesystem>
#include <string>

#include "gridrte/network.hpp"

#include "json.hpp"

namespace gridrte {

/// Network files are JSON documents with top-level keys `substations`,
/// `lines`, `towers`, `fragility_curves`. The schema ships in
/// docs/network_schema.json.
nlohmann::json network_to_json(const Network& network);
Network network_from_json(const nlohmann::json& doc);

/// Loads, links, and validates. Throws ParseError for malformed input
/// (with file/field location) and ValidationError for semantic faults.
Network load_network(const std::filesystem::path& path);
void save_network(const Network& network, const std::filesystem::path& path);

/// Canonical serialization used for fingerprinting: sorted keys,
/// no whitespace, shortest round-trip numbers.
std::string canonical_network_text(const Network& network);

}  // namespace gridrte
