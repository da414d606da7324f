#pragma once

namespace cremona {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace cremona
