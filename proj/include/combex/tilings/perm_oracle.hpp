#pragma once

#include <cstddef>
#include <vector>

#include "combex/integer.hpp"

namespace combex::tilings {

// Classical containment of 0-indexed permutations.
bool perm_contains(const std::vector<int>& perm, const std::vector<int>& patt);

// |Av_n(basis)| for n = 0..max_size by exhaustive generation.
std::vector<Integer> count_avoiders(const std::vector<std::vector<int>>& basis, std::size_t max_size);

}  // namespace combex::tilings
