#pragma once

namespace kakeya {

inline constexpr const char* kVersion = "kakeya-lab 1.0.0";

}  // namespace kakeya
