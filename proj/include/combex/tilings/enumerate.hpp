#pragma once

#include <cstddef>
#include <vector>

#include "combex/integer.hpp"
#include "combex/tilings/tiling.hpp"

namespace combex::tilings {

// Gridded permutations of each size 0..max_size avoiding the obstructions,
// grown one rightmost entry at a time.
std::vector<std::vector<GriddedPerm>> obstruction_avoiders(const Tiling& t, std::size_t max_size);

// Grid_n(T).
std::vector<GriddedPerm> gridded_perms(const Tiling& t, std::size_t n);

// |Grid_n(T)| for n = 0..max_size.
std::vector<Integer> count_gridded_perms(const Tiling& t, std::size_t max_size);

// Searches sizes 0..requirement_bound() for an object.
bool is_empty(const Tiling& t);

}  // namespace combex::tilings
