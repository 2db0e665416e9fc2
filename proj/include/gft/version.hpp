#pragma once

namespace gft {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gft
