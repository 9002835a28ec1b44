#include <algorithm>
#include <numeric>

#include "combex/tilings/tiling.hpp"

namespace combex::tilings {

namespace {

Tiling empty_set_tiling() { return Tiling(1, 1, {GriddedPerm()}, {}); }

// Keeps the members not containing another member; sorted and deduplicated.
std::vector<GriddedPerm> minimal_elements(std::vector<GriddedPerm> gps) {
  std::sort(gps.begin(), gps.end());
  gps.erase(std::unique(gps.begin(), gps.end()), gps.end());
  std::vector<GriddedPerm> out;
  for (auto& g : gps) {
    const bool redundant = std::any_of(out.begin(), out.end(), [&](const GriddedPerm& k) { return g.contains(k); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

bool contains_any(const GriddedPerm& g, const std::vector<GriddedPerm>& patterns) {
  return std::any_of(patterns.begin(), patterns.end(), [&](const GriddedPerm& p) { return g.contains(p); });
}

// Groups entries whose cells are linked through shared rows or columns.
std::vector<std::vector<std::size_t>> independent_parts(const GriddedPerm& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.cell(i).x == g.cell(j).x || g.cell(i).y == g.cell(j).y) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = parts.size();
      parts.emplace_back();
    }
    parts[slot[r]].push_back(i);
  }
  return parts;
}

// R_i is implied by R_j when every member of R_j contains a member of R_i.
bool implies(const RequirementList& stronger, const RequirementList& weaker) {
  return std::all_of(stronger.begin(), stronger.end(), [&](const GriddedPerm& r) { return contains_any(r, weaker); });
}

struct Parts {
  std::vector<GriddedPerm> obstructions;
  std::vector<RequirementList> requirements;
  bool empty = false;
};

void simplify(Parts& p) {
  if (std::any_of(p.obstructions.begin(), p.obstructions.end(), [](const GriddedPerm& o) { return o.empty(); })) {
    p.empty = true;
    return;
  }
  p.obstructions = minimal_elements(std::move(p.obstructions));

  std::vector<RequirementList> lists;
  for (auto& list : p.requirements) {
    RequirementList kept;
    bool trivial = false;
    for (auto& r : list) {
      if (r.empty()) trivial = true;
      if (!contains_any(r, p.obstructions)) kept.push_back(std::move(r));
    }
    if (trivial) continue;
    if (kept.empty()) {
      p.empty = true;
      return;
    }
    kept = minimal_elements(std::move(kept));
    if (kept.size() == 1) {
      const auto parts = independent_parts(kept.front());
      if (parts.size() > 1) {
        for (const auto& part : parts) lists.push_back({kept.front().subperm(part)});
        continue;
      }
    }
    lists.push_back(std::move(kept));
  }
  std::sort(lists.begin(), lists.end());
  lists.erase(std::unique(lists.begin(), lists.end()), lists.end());

  std::vector<bool> removed(lists.size(), false);
  for (std::size_t i = 0; i < lists.size(); ++i) {
    for (std::size_t j = 0; j < lists.size(); ++j) {
      if (i == j || removed[j]) continue;
      if (implies(lists[j], lists[i])) {
        removed[i] = true;
        break;
      }
    }
  }
  p.requirements.clear();
  for (std::size_t i = 0; i < lists.size(); ++i) {
    if (!removed[i]) p.requirements.push_back(std::move(lists[i]));
  }
}

}  // namespace

Tiling canonicalize(const Tiling& t) {
  Parts p{t.obstructions(), t.requirements(), false};
  int width = t.width();
  int height = t.height();
  for (;;) {
    simplify(p);
    if (p.empty) return empty_set_tiling();

    const Tiling current(width, height, p.obstructions, p.requirements);
    std::vector<int> col_map(width, -1);
    std::vector<int> row_map(height, -1);
    int cols = 0;
    int rows = 0;
    for (int x = 0; x < width; ++x) {
      bool all_empty = true;
      for (int y = 0; y < height && all_empty; ++y) all_empty = current.is_empty_cell({x, y});
      if (!all_empty) col_map[x] = cols++;
    }
    for (int y = 0; y < height; ++y) {
      bool all_empty = true;
      for (int x = 0; x < width && all_empty; ++x) all_empty = current.is_empty_cell({x, y});
      if (!all_empty) row_map[y] = rows++;
    }
    if (cols == 0 || rows == 0) {
      // Every cell is empty, so no requirement survived and only the empty
      // permutation remains.
      return epsilon_tiling();
    }
    if (cols == width && rows == height) break;

    auto remap = [&](const GriddedPerm& g, GriddedPerm& out) {
      std::vector<Cell> pos;
      pos.reserve(g.size());
      for (Cell c : g.positions()) {
        if (col_map[c.x] < 0 || row_map[c.y] < 0) return false;
        pos.push_back({col_map[c.x], row_map[c.y]});
      }
      out = GriddedPerm::unchecked(g.pattern(), std::move(pos));
      return true;
    };
    std::vector<GriddedPerm> obs;
    for (const auto& o : p.obstructions) {
      GriddedPerm m;
      if (remap(o, m)) obs.push_back(std::move(m));
    }
    std::vector<RequirementList> reqs;
    for (const auto& list : p.requirements) {
      RequirementList l;
      for (const auto& r : list) {
        GriddedPerm m;
        if (remap(r, m)) l.push_back(std::move(m));
      }
      reqs.push_back(std::move(l));
    }
    p.obstructions = std::move(obs);
    p.requirements = std::move(reqs);
    width = cols;
    height = rows;
  }
  return Tiling(width, height, std::move(p.obstructions), std::move(p.requirements));
}

}  // namespace combex::tilings
