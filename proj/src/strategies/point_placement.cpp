#include "combex/strategies/point_placement.hpp"

#include <algorithm>
#include <stdexcept>

namespace combex::tilings {

std::string to_string(Direction d) {
  switch (d) {
    case Direction::Left: return "left";
    case Direction::Right: return "right";
    case Direction::Up: return "up";
    case Direction::Down: return "down";
  }
  return "?";
}

namespace {

// Column and row offsets inside the 3x3 block: 0, 1 (middle) or 2.
GriddedPerm build(const GriddedPerm& g, Cell c, const std::vector<int>& col_sub, const std::vector<int>& row_sub) {
  std::vector<Cell> pos;
  pos.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Cell old = g.cell(i);
    Cell now;
    now.x = old.x < c.x ? old.x : (old.x > c.x ? old.x + 2 : old.x + col_sub[i]);
    now.y = old.y < c.y ? old.y : (old.y > c.y ? old.y + 2 : old.y + row_sub[i]);
    pos.push_back(now);
  }
  return GriddedPerm::unchecked(g.pattern(), std::move(pos));
}

GriddedPerm isolate(const GriddedPerm& g, Cell c, std::size_t e) {
  std::vector<int> col_sub(g.size(), 0);
  std::vector<int> row_sub(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    col_sub[i] = i < e ? 0 : (i == e ? 1 : 2);
    row_sub[i] = g.value(i) < g.value(e) ? 0 : (i == e ? 1 : 2);
  }
  return build(g, c, col_sub, row_sub);
}

bool farther(Cell placed, Cell centre, Direction d) {
  switch (d) {
    case Direction::Left: return placed.x < centre.x;
    case Direction::Right: return placed.x > centre.x;
    case Direction::Up: return placed.y > centre.y;
    case Direction::Down: return placed.y < centre.y;
  }
  return false;
}

}  // namespace

std::vector<GriddedPerm> stretch(const GriddedPerm& g, Cell c) {
  std::vector<std::size_t> in_col;  // index order
  std::vector<std::size_t> in_row;  // value order
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.cell(i).x == c.x) in_col.push_back(i);
    if (g.cell(i).y == c.y) in_row.push_back(i);
  }
  std::sort(in_row.begin(), in_row.end(), [&](std::size_t a, std::size_t b) { return g.value(a) < g.value(b); });

  std::vector<GriddedPerm> out;
  std::vector<int> col_sub(g.size(), 0);
  std::vector<int> row_sub(g.size(), 0);
  for (std::size_t a = 0; a <= in_col.size(); ++a) {
    for (std::size_t k = 0; k < in_col.size(); ++k) col_sub[in_col[k]] = k < a ? 0 : 2;
    for (std::size_t b = 0; b <= in_row.size(); ++b) {
      for (std::size_t k = 0; k < in_row.size(); ++k) row_sub[in_row[k]] = k < b ? 0 : 2;
      out.push_back(build(g, c, col_sub, row_sub));
    }
  }
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (g.cell(e) == c) out.push_back(isolate(g, c, e));
  }
  return out;
}

Tiling point_placement(const Tiling& t, std::size_t list_index, std::size_t entry, Direction d) {
  if (list_index >= t.requirements().size()) throw std::invalid_argument("point placement: no such requirement list");
  const RequirementList& list = t.requirements()[list_index];
  if (list.size() != 1) throw std::invalid_argument("point placement needs a singleton requirement list");
  const GriddedPerm& r = list.front();
  if (entry >= r.size()) throw std::invalid_argument("point placement: entry out of range");
  const Cell c = r.cell(entry);
  const Cell centre{c.x + 1, c.y + 1};
  const int width = t.width() + 2;
  const int height = t.height() + 2;

  std::vector<GriddedPerm> obs;
  for (const auto& o : t.obstructions()) {
    auto s = stretch(o, c);
    obs.insert(obs.end(), s.begin(), s.end());
  }
  obs.push_back(GriddedPerm::localized({0, 1}, centre));
  obs.push_back(GriddedPerm::localized({1, 0}, centre));
  for (int y = 0; y < height; ++y) {
    if (y != centre.y) obs.push_back(GriddedPerm::point({centre.x, y}));
  }
  for (int x = 0; x < width; ++x) {
    if (x != centre.x) obs.push_back(GriddedPerm::point({x, centre.y}));
  }
  // No other occurrence of r may put its placed entry beyond the isolated point.
  for (auto& s : stretch(r, c)) {
    if (farther(s.cell(entry), centre, d)) obs.push_back(std::move(s));
  }

  std::vector<RequirementList> reqs;
  for (std::size_t i = 0; i < t.requirements().size(); ++i) {
    if (i == list_index) continue;
    RequirementList l;
    for (const auto& member : t.requirements()[i]) {
      auto s = stretch(member, c);
      l.insert(l.end(), s.begin(), s.end());
    }
    reqs.push_back(std::move(l));
  }
  reqs.push_back({GriddedPerm::point(centre)});
  reqs.push_back({isolate(r, c, entry)});
  return canonicalize(Tiling(width, height, std::move(obs), std::move(reqs)));
}

std::vector<Decomposition<Tiling>> all_point_placements(const Tiling& t) {
  std::vector<Decomposition<Tiling>> out;
  const auto& lists = t.requirements();
  for (std::size_t li = 0; li < lists.size(); ++li) {
    if (lists[li].size() != 1) continue;
    const GriddedPerm& r = lists[li].front();
    if (r.size() == 1 && t.is_point_cell(r.cell(0))) continue;
    for (std::size_t e = 0; e < r.size(); ++e) {
      for (Direction d : {Direction::Left, Direction::Right, Direction::Up, Direction::Down}) {
        std::string name = "point_pl:(" + r.encode() + ")@" + std::to_string(e + 1) + "," + to_string(d);
        out.push_back({std::move(name), {point_placement(t, li, e, d)}, Equivalence{}});
      }
    }
  }
  return out;
}

}  // namespace combex::tilings
