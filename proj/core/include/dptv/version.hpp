#pragma once

namespace dptv {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dptv
