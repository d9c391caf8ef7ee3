#pragma once

namespace splicekit {

inline constexpr const char* version = "0.1.0";

}  // namespace splicekit
