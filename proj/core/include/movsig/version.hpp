#pragma once

namespace movsig {

inline constexpr const char* kToolName = "movsig";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace movsig
