#pragma once

#include <cstddef>

#include "combex/engine/strategy.hpp"
#include "combex/tilings/tiling.hpp"

namespace combex::tilings {

struct TilingPackOptions {
  std::size_t max_req_insert_len = 2;
  bool partial_factor = true;
  // Length bound for inferring obstructions by enumeration; 0 disables it.
  std::size_t obs_inferral_max_len = 0;
};

// Inferral: row/column separation, obstruction inferral. Initial: factor.
// Expansion: requirement insertion, then point placement. Verification: the
// empty, point and monotone tilings.
StrategyPack<Tiling> default_tiling_pack(const TilingPackOptions& options = {});

}  // namespace combex::tilings
