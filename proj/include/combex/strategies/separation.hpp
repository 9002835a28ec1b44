#pragma once

#include <optional>
#include <vector>

#include "combex/engine/strategy.hpp"
#include "combex/tilings/tiling.hpp"

namespace combex::tilings {

// Splits row `row` in two, sending the cells in `lower` to the lower new row.
// nullopt unless every entry of a lower cell is forced below every entry of the
// other nonempty cells of the row.
std::optional<Tiling> row_separation(const Tiling& t, int row, const std::vector<Cell>& lower);

// Column analogue: the cells in `left` go to the left new column.
std::optional<Tiling> column_separation(const Tiling& t, int column, const std::vector<Cell>& left);

// The first proper split of the row, trying the closure of each cell in order.
std::optional<std::vector<Cell>> separable_split(const Tiling& t, int row);

// First applicable separation, rows before columns.
std::optional<Decomposition<Tiling>> row_column_separation(const Tiling& t);

}  // namespace combex::tilings
