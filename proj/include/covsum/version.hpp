#pragma once

namespace covsum {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace covsum
