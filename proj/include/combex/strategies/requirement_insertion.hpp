#pragma once

#include <optional>
#include <vector>

#include "combex/engine/strategy.hpp"
#include "combex/tilings/tiling.hpp"

namespace combex::tilings {

// Splits T into the objects avoiding every member of h and those containing one.
// nullopt when either side is empty.
std::optional<Decomposition<Tiling>> requirement_insertion(const Tiling& t, const RequirementList& h);

// Every localized pattern of length 1..max_length in every nonempty cell.
std::vector<Decomposition<Tiling>> all_requirement_insertions(const Tiling& t, std::size_t max_length);

// All permutations of 0..n-1 in lexicographic order.
std::vector<std::vector<int>> permutations_of(std::size_t n);

}  // namespace combex::tilings
