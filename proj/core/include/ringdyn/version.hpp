#pragma once

namespace ringdyn {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ringdyn
