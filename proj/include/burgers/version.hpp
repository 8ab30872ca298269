#pragma once

namespace burgers {
inline constexpr const char* kVersion = "0.1.0";
}
