#include "combex/tilings/enumerate.hpp"

#include <algorithm>

namespace combex::tilings {

namespace {

class Extender {
 public:
  explicit Extender(const Tiling& t) : t_(t), empty_(t.width() * t.height(), false) {
    for (const auto& o : t.obstructions()) {
      if (o.size() == 1) empty_[index(o.cell(0))] = true;
    }
  }

  // Appends to `out` every obstruction-avoiding one-entry extension of g.
  void extend(const GriddedPerm& g, std::vector<GriddedPerm>& out) const {
    const std::size_t n = g.size();
    std::vector<int> row_by_value(n);
    for (std::size_t i = 0; i < n; ++i) row_by_value[g.value(i)] = g.cell(i).y;
    const int first_x = n == 0 ? 0 : g.cell(n - 1).x;
    std::vector<int> patt(n + 1);
    std::vector<Cell> pos(g.positions());
    pos.push_back({});
    for (int x = first_x; x < t_.width(); ++x) {
      for (std::size_t v = 0; v <= n; ++v) {
        const int ymin = v > 0 ? row_by_value[v - 1] : 0;
        const int ymax = v < n ? row_by_value[v] : t_.height() - 1;
        for (int y = ymin; y <= ymax; ++y) {
          if (empty_[index({x, y})]) continue;
          for (std::size_t i = 0; i < n; ++i) patt[i] = g.value(i) >= static_cast<int>(v) ? g.value(i) + 1 : g.value(i);
          patt[n] = static_cast<int>(v);
          pos[n] = {x, y};
          GriddedPerm child = GriddedPerm::unchecked(patt, pos);
          const bool bad = std::any_of(t_.obstructions().begin(), t_.obstructions().end(),
                                       [&](const GriddedPerm& o) { return child.contains_using_last(o); });
          if (!bad) out.push_back(std::move(child));
        }
      }
    }
  }

 private:
  std::size_t index(Cell c) const { return static_cast<std::size_t>(c.x) * t_.height() + c.y; }

  const Tiling& t_;
  std::vector<bool> empty_;
};

}  // namespace

std::vector<std::vector<GriddedPerm>> obstruction_avoiders(const Tiling& t, std::size_t max_size) {
  std::vector<std::vector<GriddedPerm>> levels;
  if (t.is_trivially_empty()) {
    levels.resize(max_size + 1);
    return levels;
  }
  const Extender ext(t);
  levels.push_back({GriddedPerm()});
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<GriddedPerm> next;
    for (const auto& g : levels.back()) ext.extend(g, next);
    levels.push_back(std::move(next));
  }
  return levels;
}

std::vector<GriddedPerm> gridded_perms(const Tiling& t, std::size_t n) {
  auto levels = obstruction_avoiders(t, n);
  std::vector<GriddedPerm> out;
  for (auto& g : levels[n]) {
    if (t.satisfies_requirements(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Integer> count_gridded_perms(const Tiling& t, std::size_t max_size) {
  const auto levels = obstruction_avoiders(t, max_size);
  std::vector<Integer> out;
  for (const auto& level : levels) {
    std::size_t c = 0;
    for (const auto& g : level) c += t.satisfies_requirements(g) ? 1 : 0;
    out.emplace_back(c);
  }
  return out;
}

bool is_empty(const Tiling& t) {
  if (t.is_trivially_empty()) return true;
  const std::size_t bound = t.requirement_bound();
  const Extender ext(t);
  std::vector<GriddedPerm> level{GriddedPerm()};
  for (std::size_t n = 0; n <= bound; ++n) {
    for (const auto& g : level) {
      if (t.satisfies_requirements(g)) return false;
    }
    if (n == bound) break;
    std::vector<GriddedPerm> next;
    for (const auto& g : level) ext.extend(g, next);
    level = std::move(next);
  }
  return true;
}

}  // namespace combex::tilings
