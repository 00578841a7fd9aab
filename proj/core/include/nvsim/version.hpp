#pragma once

namespace nvsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nvsim
