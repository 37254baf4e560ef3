#pragma once

namespace stablefp {

inline constexpr const char* version = "1.0.0";

}  // namespace stablefp
