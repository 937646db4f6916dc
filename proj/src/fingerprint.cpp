#include "gridrte/fingerprint.hpp"

#include "gridrte/network_io.hpp"
#include "gridrte/params_io.hpp"
#include "gridrte/text.hpp"

namespace gridrte {

std::string network_fingerprint(const Network& network) {
    return to_hex64(fnv1a64(canonical_network_text(network)));
}

std::string parameters_fingerprint(const RteParameters& params) {
    return to_hex64(fnv1a64(canonical_parameters_text(params)));
}

}  // namespace gridrte
