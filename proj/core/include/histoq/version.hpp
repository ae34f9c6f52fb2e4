#pragma once

namespace histoq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace histoq
