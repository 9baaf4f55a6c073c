#pragma once

namespace volscale {

inline constexpr const char* kVersion = "0.1.0";

} // namespace volscale
