#pragma once

#include <string>
#include <vector>

#include "combex/engine/strategy.hpp"
#include "combex/tilings/tiling.hpp"

namespace combex::tilings {

enum class Direction { Left, Right, Up, Down };

std::string to_string(Direction d);

// Multiplexes of g around cell c after c becomes a 3x3 block: those with no entry
// in the middle row or column, and those whose only such entry sits in the
// middle cell.
std::vector<GriddedPerm> stretch(const GriddedPerm& g, Cell c);

// Places entry `entry` of the single requirement in list `list_index` as the
// extreme such entry in direction d. Throws std::invalid_argument when the
// list is not a singleton or the indices are out of range.
Tiling point_placement(const Tiling& t, std::size_t list_index, std::size_t entry, Direction d);

// Every singleton requirement list, every entry and every direction, except
// re-placing a point cell.
std::vector<Decomposition<Tiling>> all_point_placements(const Tiling& t);

}  // namespace combex::tilings
