#pragma once

#include <optional>

#include "combex/engine/kernel.hpp"
#include "combex/tilings/tiling.hpp"

namespace combex::tilings {

// Recognizes canonical tilings with at most one object per size: the
// empty-permutation tiling, and 1x1 tilings with a 12 or 21 obstruction. In the
// second case the monotone objects of sizes first..last-1 survive.
std::optional<Verified> verify(const Tiling& t);

}  // namespace combex::tilings
