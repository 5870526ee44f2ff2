#pragma once

namespace qdissect {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qdissect
