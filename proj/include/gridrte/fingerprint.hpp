#pragma once

#include <string>

#include "gridrte/network.hpp"
#include "gridrte/rte.hpp"

namespace gridrte {

/// Content fingerprints (16 hex digits) over canonical serializations.
/// Artifacts carry these so downstream commands can refuse to combine
/// results computed from different inputs.
std::string network_fingerprint(const Network& network);
std::string parameters_fingerprint(const RteParameters& params);

}  // namespace gridrte
