#pragma once

namespace ogplab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCsvSchemaVersion = "1";

}  // namespace ogplab
