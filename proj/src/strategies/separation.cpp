#include "combex/strategies/separation.hpp"

#include <algorithm>

namespace combex::tilings {

namespace {

bool has_obstruction(const Tiling& t, const GriddedPerm& g) {
  return std::find(t.obstructions().begin(), t.obstructions().end(), g) != t.obstructions().end();
}

// The obstruction forcing every entry of a below every entry of b (same row).
GriddedPerm critical(Cell a, Cell b) {
  if (a.x < b.x) return GriddedPerm::unchecked({1, 0}, {a, b});
  return GriddedPerm::unchecked({0, 1}, {b, a});
}

bool forced_below(const Tiling& t, Cell a, Cell b) { return has_obstruction(t, critical(a, b)); }

std::vector<Cell> nonempty_in_row(const Tiling& t, int row) {
  std::vector<Cell> out;
  for (int x = 0; x < t.width(); ++x) {
    if (!t.is_empty_cell({x, row})) out.push_back({x, row});
  }
  return out;
}

bool member(const std::vector<Cell>& cells, Cell c) { return std::find(cells.begin(), cells.end(), c) != cells.end(); }

std::string cells_name(const std::vector<Cell>& cells) {
  std::string out;
  for (Cell c : cells) out += "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
  return out;
}

}  // namespace

std::optional<Tiling> row_separation(const Tiling& t, int row, const std::vector<Cell>& lower) {
  if (row < 0 || row >= t.height()) return std::nullopt;
  const std::vector<Cell> cells = nonempty_in_row(t, row);
  std::vector<Cell> upper;
  for (Cell c : cells) {
    if (!member(lower, c)) upper.push_back(c);
  }
  for (Cell c : lower) {
    if (!member(cells, c)) return std::nullopt;
  }
  if (lower.empty() || upper.empty()) return std::nullopt;
  std::vector<GriddedPerm> crit;
  for (Cell a : lower) {
    for (Cell b : upper) {
      if (!forced_below(t, a, b)) return std::nullopt;
      crit.push_back(critical(a, b));
    }
  }
  auto gamma = [&](Cell c) {
    if (c.y < row || (c.y == row && member(lower, c))) return c;
    return Cell{c.x, c.y + 1};
  };
  auto image = [&](const GriddedPerm& g, GriddedPerm& out) {
    std::vector<Cell> pos;
    for (Cell c : g.positions()) pos.push_back(gamma(c));
    if (!GriddedPerm::consistent(g.pattern(), pos)) return false;
    out = GriddedPerm::unchecked(g.pattern(), std::move(pos));
    return true;
  };
  std::vector<GriddedPerm> obs;
  for (const auto& o : t.obstructions()) {
    if (std::find(crit.begin(), crit.end(), o) != crit.end()) continue;
    GriddedPerm m;
    if (image(o, m)) obs.push_back(std::move(m));
  }
  for (int x = 0; x < t.width(); ++x) {
    if (member(lower, Cell{x, row})) {
      obs.push_back(GriddedPerm::point({x, row + 1}));
    } else {
      obs.push_back(GriddedPerm::point({x, row}));
    }
  }
  std::vector<RequirementList> reqs;
  for (const auto& list : t.requirements()) {
    RequirementList l;
    for (const auto& r : list) {
      GriddedPerm m;
      if (image(r, m)) l.push_back(std::move(m));
    }
    reqs.push_back(std::move(l));
  }
  return canonicalize(Tiling(t.width(), t.height() + 1, std::move(obs), std::move(reqs)));
}

std::optional<Tiling> column_separation(const Tiling& t, int column, const std::vector<Cell>& left) {
  std::vector<Cell> swapped;
  for (Cell c : left) swapped.push_back({c.y, c.x});
  auto r = row_separation(t.transpose(), column, swapped);
  if (!r) return std::nullopt;
  return canonicalize(r->transpose());
}

std::optional<std::vector<Cell>> separable_split(const Tiling& t, int row) {
  const std::vector<Cell> cells = nonempty_in_row(t, row);
  if (cells.size() < 2) return std::nullopt;
  for (Cell start : cells) {
    // Anything not forced above a member of the split must join it.
    std::vector<Cell> split{start};
    for (bool grew = true; grew;) {
      grew = false;
      for (Cell b : cells) {
        if (member(split, b)) continue;
        const bool needed = std::any_of(split.begin(), split.end(), [&](Cell a) { return !forced_below(t, a, b); });
        if (needed) {
          split.push_back(b);
          grew = true;
        }
      }
    }
    if (split.size() < cells.size()) {
      std::sort(split.begin(), split.end());
      return split;
    }
  }
  return std::nullopt;
}

std::optional<Decomposition<Tiling>> row_column_separation(const Tiling& t) {
  for (int row = 0; row < t.height(); ++row) {
    if (auto split = separable_split(t, row)) {
      if (auto r = row_separation(t, row, *split)) {
        return Decomposition<Tiling>{"row_sep:" + std::to_string(row) + ":" + cells_name(*split), {std::move(*r)},
                                     Equivalence{}};
      }
    }
  }
  const Tiling tt = t.transpose();
  for (int col = 0; col < tt.height(); ++col) {
    if (auto split = separable_split(tt, col)) {
      std::vector<Cell> left;
      for (Cell c : *split) left.push_back({c.y, c.x});
      if (auto r = column_separation(t, col, left)) {
        return Decomposition<Tiling>{"col_sep:" + std::to_string(col) + ":" + cells_name(left), {std::move(*r)},
                                     Equivalence{}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace combex::tilings
