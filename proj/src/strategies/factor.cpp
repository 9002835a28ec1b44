#include "combex/strategies/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "combex/tilings/enumerate.hpp"

namespace combex::tilings {

CellPartition factor_partition(const Tiling& t) {
  const std::vector<Cell> cells = t.nonempty_cells();
  std::map<Cell, std::size_t> index;
  for (std::size_t i = 0; i < cells.size(); ++i) index[cells[i]] = i;
  std::vector<std::size_t> parent(cells.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto join = [&](Cell a, Cell b) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia != index.end() && ib != index.end()) parent[find(ia->second)] = find(ib->second);
  };
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (cells[i].x == cells[j].x || cells[i].y == cells[j].y) join(cells[i], cells[j]);
    }
  }
  for (const auto& o : t.obstructions()) {
    for (Cell c : o.positions()) join(o.cell(0), c);
  }
  for (const auto& list : t.requirements()) {
    std::vector<Cell> all;
    for (const auto& r : list) all.insert(all.end(), r.positions().begin(), r.positions().end());
    for (Cell c : all) join(all.front(), c);
  }
  std::map<std::size_t, std::vector<Cell>> groups;
  for (std::size_t i = 0; i < cells.size(); ++i) groups[find(i)].push_back(cells[i]);
  CellPartition out;
  for (auto& [root, group] : groups) out.push_back(std::move(group));
  for (auto& part : out) std::sort(part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

Tiling subtiling(const Tiling& t, const std::vector<Cell>& cells) {
  std::vector<int> xs;
  std::vector<int> ys;
  for (Cell c : cells) {
    xs.push_back(c.x);
    ys.push_back(c.y);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  auto inside = [&](Cell c) { return std::binary_search(cells.begin(), cells.end(), c); };
  auto remap = [&](Cell c) {
    return Cell{static_cast<int>(std::lower_bound(xs.begin(), xs.end(), c.x) - xs.begin()),
                static_cast<int>(std::lower_bound(ys.begin(), ys.end(), c.y) - ys.begin())};
  };
  auto lift = [&](const GriddedPerm& g, GriddedPerm& out) {
    std::vector<Cell> pos;
    for (Cell c : g.positions()) {
      if (!inside(c)) return false;
      pos.push_back(remap(c));
    }
    out = GriddedPerm::unchecked(g.pattern(), std::move(pos));
    return true;
  };
  std::vector<GriddedPerm> obs;
  for (const auto& o : t.obstructions()) {
    GriddedPerm m;
    if (lift(o, m)) obs.push_back(std::move(m));
  }
  for (int x : xs) {
    for (int y : ys) {
      if (!inside({x, y})) obs.push_back(GriddedPerm::point(remap({x, y})));
    }
  }
  std::vector<RequirementList> reqs;
  for (const auto& list : t.requirements()) {
    RequirementList l;
    for (const auto& r : list) {
      GriddedPerm m;
      if (lift(r, m)) l.push_back(std::move(m));
    }
    if (l.size() == list.size()) reqs.push_back(std::move(l));
  }
  return canonicalize(Tiling(static_cast<int>(xs.size()), static_cast<int>(ys.size()), std::move(obs), std::move(reqs)));
}

namespace {

std::string partition_name(const CellPartition& p) {
  std::string out = "factor:";
  for (const auto& part : p) {
    out.push_back('[');
    for (Cell c : part) out += "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
    out.push_back(']');
  }
  return out;
}

}  // namespace

std::optional<Decomposition<Tiling>> factor_with(const Tiling& t, const CellPartition& partition) {
  if (partition.size() < 2) return std::nullopt;
  std::vector<Tiling> children;
  for (const auto& part : partition) {
    Tiling child = subtiling(t, part);
    if (child == epsilon_tiling() || is_empty(child)) return std::nullopt;
    children.push_back(std::move(child));
  }
  // A child may not take the whole size if some other child has no size-0 object.
  std::vector<bool> needs_entry(children.size());
  for (std::size_t i = 0; i < children.size(); ++i) needs_entry[i] = !children[i].requirements().empty();
  Product kernel{children.size(), {}, 0};
  for (std::size_t i = 0; i < children.size(); ++i) {
    for (std::size_t j = 0; j < children.size(); ++j) {
      if (j != i && needs_entry[j]) {
        kernel.reliance_set.push_back(i);
        break;
      }
    }
  }
  return Decomposition<Tiling>{partition_name(partition), std::move(children), std::move(kernel)};
}

std::vector<Decomposition<Tiling>> factorizations(const Tiling& t, bool partial) {
  std::vector<Decomposition<Tiling>> out;
  const CellPartition full = factor_partition(t);
  if (full.size() < 2) return out;
  if (auto d = factor_with(t, full)) out.push_back(std::move(*d));
  if (!partial || full.size() < 3) return out;
  for (std::size_t i = 0; i < full.size(); ++i) {
    for (std::size_t j = i + 1; j < full.size(); ++j) {
      CellPartition merged;
      std::vector<Cell> joined = full[i];
      joined.insert(joined.end(), full[j].begin(), full[j].end());
      std::sort(joined.begin(), joined.end());
      for (std::size_t k = 0; k < full.size(); ++k) {
        if (k == i) {
          merged.push_back(joined);
        } else if (k != j) {
          merged.push_back(full[k]);
        }
      }
      std::sort(merged.begin(), merged.end());
      if (auto d = factor_with(t, merged)) out.push_back(std::move(*d));
    }
  }
  return out;
}

}  // namespace combex::tilings
