#pragma once

namespace wcga {
inline constexpr const char* kVersion = "0.1.0";
}
