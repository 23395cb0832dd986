#pragma once

namespace quartic {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace quartic
