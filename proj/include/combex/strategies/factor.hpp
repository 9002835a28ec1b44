#pragma once

#include <optional>
#include <vector>

#include "combex/engine/strategy.hpp"
#include "combex/tilings/tiling.hpp"

namespace combex::tilings {

using CellPartition = std::vector<std::vector<Cell>>;

// Connected components of the nonempty cells, linking cells that share a row or
// column or appear together in an obstruction or a requirement list. Parts and
// their cells are sorted.
CellPartition factor_partition(const Tiling& t);

// The subtiling on `cells`, re-indexed compactly, canonical.
Tiling subtiling(const Tiling& t, const std::vector<Cell>& cells);

// Product rule for a partition into independent parts; nullopt when there is a
// single part or some part has no object of size at least 1.
std::optional<Decomposition<Tiling>> factor_with(const Tiling& t, const CellPartition& partition);

// The full factorization and, with three or more parts, each factorization
// obtained by merging one pair of parts.
std::vector<Decomposition<Tiling>> factorizations(const Tiling& t, bool partial = true);

}  // namespace combex::tilings
