#pragma once

namespace gridrte {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace gridrte
