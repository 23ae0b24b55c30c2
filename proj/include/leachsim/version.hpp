#pragma once

namespace leachsim {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace leachsim
