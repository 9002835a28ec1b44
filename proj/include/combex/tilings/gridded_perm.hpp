#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace combex::tilings {

struct Cell {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Standardizes a sequence of distinct values to a 0-indexed permutation.
std::vector<int> standardize(std::span<const int> values);

// A permutation (0-indexed) with a cell for every entry. Columns never decrease
// from left to right and rows never decrease from bottom to top.
class GriddedPerm {
 public:
  GriddedPerm() = default;
  // Throws std::invalid_argument on a malformed or inconsistent input.
  GriddedPerm(std::vector<int> pattern, std::vector<Cell> positions);
  static GriddedPerm localized(std::vector<int> pattern, Cell c);
  static GriddedPerm point(Cell c) { return localized({0}, c); }
  // Skips validation; callers guarantee consistency.
  static GriddedPerm unchecked(std::vector<int> pattern, std::vector<Cell> positions);

  static bool consistent(std::span<const int> pattern, std::span<const Cell> positions);

  std::size_t size() const { return patt_.size(); }
  bool empty() const { return patt_.empty(); }
  const std::vector<int>& pattern() const { return patt_; }
  const std::vector<Cell>& positions() const { return pos_; }
  int value(std::size_t i) const { return patt_[i]; }
  Cell cell(std::size_t i) const { return pos_[i]; }

  bool contains(const GriddedPerm& h) const;
  // Containment restricted to occurrences that use the last entry.
  bool contains_using_last(const GriddedPerm& h) const;
  std::size_t count_occurrences(const GriddedPerm& h) const;

  GriddedPerm subperm(std::span<const std::size_t> indices) const;
  GriddedPerm without(std::span<const std::size_t> indices) const;
  // Inverse permutation with cells transposed.
  GriddedPerm transpose() const;

  bool is_localized() const;
  std::vector<Cell> cells() const;  // distinct, sorted

  // "pattern|x0,y0;x1,y1;..." with a 1-indexed pattern.
  std::string encode() const;
  static GriddedPerm parse(std::string_view text);

  friend bool operator==(const GriddedPerm&, const GriddedPerm&) = default;
  // Ordered by size, then pattern, then positions.
  friend std::strong_ordering operator<=>(const GriddedPerm& a, const GriddedPerm& b);

 private:
  std::vector<int> patt_;
  std::vector<Cell> pos_;
};

// Parses a 1-indexed permutation such as "1342" (or "1.10.2..." for long ones).
std::vector<int> parse_pattern(std::string_view text);
std::string format_pattern(std::span<const int> pattern);

}  // namespace combex::tilings
