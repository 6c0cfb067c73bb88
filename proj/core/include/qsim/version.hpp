#pragma once

namespace qsim {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace qsim
