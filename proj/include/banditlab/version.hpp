#pragma once

#include <string_view>

namespace banditlab {

inline constexpr std::string_view kVersion = "0.1.0";

// Identity of the pinned generator, recorded in CSV metadata so outputs
// can be tied to a reproducible random stream.
inline constexpr std::string_view kRngName = "mt19937_64";

}  // namespace banditlab
