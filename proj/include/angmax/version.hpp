#pragma once

namespace angmax {

inline constexpr const char* kVersion = "angmax 0.1.0";

} // namespace angmax
