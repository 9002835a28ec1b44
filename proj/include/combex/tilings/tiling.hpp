#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "combex/tilings/gridded_perm.hpp"

namespace combex::tilings {

using RequirementList = std::vector<GriddedPerm>;

struct RedundantBasis : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A t x u grid with obstructions and requirement lists. Its objects are the
// gridded permutations in the grid avoiding every obstruction and containing at
// least one member of every requirement list.
class Tiling {
 public:
  Tiling() = default;
  // Raw constructor; checks that every cell lies inside the grid.
  Tiling(int width, int height, std::vector<GriddedPerm> obstructions, std::vector<RequirementList> requirements);

  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<GriddedPerm>& obstructions() const { return obstructions_; }
  const std::vector<RequirementList>& requirements() const { return requirements_; }

  bool avoids_obstructions(const GriddedPerm& g) const;
  bool satisfies_requirements(const GriddedPerm& g) const;
  bool in_grid(const GriddedPerm& g) const;  // membership in Grid(T), ignoring dims
  bool fits(const GriddedPerm& g) const;     // every cell inside the grid

  // A cell carrying the size-1 obstruction.
  bool is_empty_cell(Cell c) const;
  std::vector<Cell> nonempty_cells() const;
  // A cell with 12 and 21 obstructions and a point requirement of its own.
  bool is_point_cell(Cell c) const;
  // Sum over requirement lists of the largest member's size.
  std::size_t requirement_bound() const;
  // True when obstructions include the empty permutation.
  bool is_trivially_empty() const;

  // "t,u # obs;obs;... # list|list|..." where each gp is "(pattern|cells)" and
  // members of one requirement list are separated by ','.
  std::string encode() const;
  static Tiling parse(std::string_view text);

  // Inverse permutations, swapped axes.
  Tiling transpose() const;

  Tiling with_obstructions(const std::vector<GriddedPerm>& extra) const;
  Tiling with_requirement(RequirementList list) const;

  friend bool operator==(const Tiling&, const Tiling&) = default;

 private:
  int width_ = 1;
  int height_ = 1;
  std::vector<GriddedPerm> obstructions_;
  std::vector<RequirementList> requirements_;
};

// Removes redundant obstructions, requirements and lists, splits requirements
// whose parts share no row or column, trims empty rows and columns and sorts.
// Idempotent; leaves Grid unchanged up to the trimming bijection.
Tiling canonicalize(const Tiling& t);

// The 1x1 tiling whose obstructions are the basis. Throws RedundantBasis when
// one basis element contains another, std::invalid_argument when empty.
Tiling basis_to_root_tiling(const std::vector<std::vector<int>>& basis);

// The canonical tilings with a single object (the empty permutation / one point).
Tiling epsilon_tiling();
Tiling point_tiling();

}  // namespace combex::tilings
