#pragma once

namespace nga {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nga
