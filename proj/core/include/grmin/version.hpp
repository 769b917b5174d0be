#pragma once

namespace grmin {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace grmin
