#pragma once

namespace gdlab {
inline constexpr const char* kVersion = "0.1.0";
}
