#pragma once

namespace bsplan {

inline constexpr const char* kToolName = "bsplan";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace bsplan
