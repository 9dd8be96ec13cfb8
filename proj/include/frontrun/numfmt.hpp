#pragma once

#include <string>

namespace frontrun {

// 17 significant digits: round-trip exact for 64-bit floats.
[[nodiscard]] std::string format_g17(double value);

} // namespace frontrun
