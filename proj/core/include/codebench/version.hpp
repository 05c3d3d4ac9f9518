#pragma once

namespace codebench {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace codebench
