#include "combex/strategies/obstruction_inferral.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "combex/tilings/enumerate.hpp"

namespace combex::tilings {

namespace {

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

// Every index subset of size 1..k of g, as standardized gridded permutations.
void collect_subpatterns(const GriddedPerm& g, std::size_t k, std::set<GriddedPerm>& out) {
  const std::size_t n = g.size();
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!idx.empty()) out.insert(g.subperm(idx));
    if (idx.size() == k) return;
    for (std::size_t i = from; i < n; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<GriddedPerm> requirement_implied_obstructions(const Tiling& t) {
  std::vector<GriddedPerm> out;
  for (const auto& o : t.obstructions()) {
    const auto parts = independent_parts(o);
    if (parts.size() < 2) continue;
    for (const auto& part : parts) {
      const GriddedPerm piece = o.subperm(part);
      const bool forced = std::any_of(t.requirements().begin(), t.requirements().end(), [&](const RequirementList& l) {
        return std::all_of(l.begin(), l.end(), [&](const GriddedPerm& r) { return r.contains(piece); });
      });
      if (forced) out.push_back(o.without(part));
    }
  }
  return out;
}

std::optional<Tiling> obstruction_inferral(const Tiling& t) {
  const auto extra = requirement_implied_obstructions(t);
  if (extra.empty()) return std::nullopt;
  Tiling out = canonicalize(t.with_obstructions(extra));
  if (out == t) return std::nullopt;
  return out;
}

std::vector<GriddedPerm> unreachable_patterns(const Tiling& t, std::size_t max_length) {
  if (t.requirements().empty() || t.is_trivially_empty()) return {};
  const std::size_t top = t.requirement_bound() + max_length;
  const auto levels = obstruction_avoiders(t, top);
  std::set<GriddedPerm> seen;
  for (const auto& level : levels) {
    for (const auto& g : level) {
      if (t.satisfies_requirements(g)) collect_subpatterns(g, max_length, seen);
    }
  }
  std::vector<GriddedPerm> out;
  for (std::size_t n = 1; n <= max_length && n < levels.size(); ++n) {
    for (const auto& h : levels[n]) {
      if (!seen.count(h)) out.push_back(h);
    }
  }
  return out;
}

std::optional<Tiling> exhaustive_obstruction_inferral(const Tiling& t, std::size_t max_length) {
  const auto extra = unreachable_patterns(t, max_length);
  if (extra.empty()) return std::nullopt;
  Tiling out = canonicalize(t.with_obstructions(extra));
  if (out == t) return std::nullopt;
  return out;
}

}  // namespace combex::tilings
