#include "combex/strategies/requirement_insertion.hpp"

#include <algorithm>
#include <numeric>

#include "combex/tilings/enumerate.hpp"

namespace combex::tilings {

namespace {

std::string insertion_name(const RequirementList& h) {
  std::string out = "req_ins:";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i > 0) out.push_back(',');
    if (h[i].is_localized() && !h[i].empty()) {
      const Cell c = h[i].cell(0);
      out += format_pattern(h[i].pattern()) + "@(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
    } else {
      out += "(" + h[i].encode() + ")";
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> permutations_of(std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::optional<Decomposition<Tiling>> requirement_insertion(const Tiling& t, const RequirementList& h) {
  Tiling avoiding = canonicalize(t.with_obstructions(h));
  if (is_empty(avoiding)) return std::nullopt;
  Tiling containing = canonicalize(t.with_requirement(h));
  if (is_empty(containing)) return std::nullopt;
  return Decomposition<Tiling>{insertion_name(h), {std::move(avoiding), std::move(containing)}, DisjointUnion{2}};
}

std::vector<Decomposition<Tiling>> all_requirement_insertions(const Tiling& t, std::size_t max_length) {
  std::vector<Decomposition<Tiling>> out;
  for (Cell c : t.nonempty_cells()) {
    for (std::size_t len = 1; len <= max_length; ++len) {
      for (auto& p : permutations_of(len)) {
        const GriddedPerm h = GriddedPerm::localized(std::move(p), c);
        if (!t.avoids_obstructions(h)) continue;
        if (auto d = requirement_insertion(t, {h})) out.push_back(std::move(*d));
      }
    }
  }
  return out;
}

}  // namespace combex::tilings
