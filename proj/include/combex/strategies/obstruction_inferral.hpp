#pragma once

#include <optional>
#include <vector>

#include "combex/tilings/tiling.hpp"

namespace combex::tilings {

// Obstructions implied by a requirement list: when a part of an obstruction
// (entries split so that no two parts share a row or column) occurs in every
// member of some list, the rest of the obstruction is itself forbidden.
std::vector<GriddedPerm> requirement_implied_obstructions(const Tiling& t);

// Canonical T with those obstructions added; nullopt if nothing changes.
std::optional<Tiling> obstruction_inferral(const Tiling& t);

// Gridded permutations of length <= max_length that no object of T contains,
// found by enumerating Grid(T) up to requirement_bound() + max_length.
std::vector<GriddedPerm> unreachable_patterns(const Tiling& t, std::size_t max_length);

// Canonical T with every unreachable pattern as an obstruction; nullopt if nothing changes.
std::optional<Tiling> exhaustive_obstruction_inferral(const Tiling& t, std::size_t max_length);

}  // namespace combex::tilings
