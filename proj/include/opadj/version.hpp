#pragma once

namespace opadj {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace opadj
