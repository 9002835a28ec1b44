#include "combex/strategies/verification.hpp"

#include <algorithm>
#include <numeric>

namespace combex::tilings {

namespace {

bool is_increasing(const GriddedPerm& g) { return std::is_sorted(g.pattern().begin(), g.pattern().end()); }
bool is_decreasing(const GriddedPerm& g) {
  return std::is_sorted(g.pattern().begin(), g.pattern().end(), std::greater<int>());
}

}  // namespace

std::optional<Verified> verify(const Tiling& t) {
  if (t == epsilon_tiling()) return Verified{"empty", 0, 1};
  if (t.width() != 1 || t.height() != 1 || t.is_trivially_empty()) return std::nullopt;
  const auto& obs = t.obstructions();
  const bool no_ascent = std::find(obs.begin(), obs.end(), GriddedPerm::localized({0, 1}, {0, 0})) != obs.end();
  const bool no_descent = std::find(obs.begin(), obs.end(), GriddedPerm::localized({1, 0}, {0, 0})) != obs.end();
  if (!no_ascent && !no_descent) return std::nullopt;
  // The surviving objects are the decreasing (or increasing) permutations.
  auto allowed = [&](const GriddedPerm& g) { return no_ascent ? is_decreasing(g) : is_increasing(g); };

  std::optional<std::size_t> last;
  for (const auto& o : obs) {
    if (!allowed(o)) continue;
    if (!last || o.size() < *last) last = o.size();
  }
  std::size_t first = 0;
  for (const auto& list : t.requirements()) {
    std::optional<std::size_t> shortest;
    for (const auto& r : list) {
      if (allowed(r) && (!shortest || r.size() < *shortest)) shortest = r.size();
    }
    if (!shortest) return std::nullopt;
    first = std::max(first, *shortest);
  }
  if (last && first >= *last) return std::nullopt;
  if (first == 0 && last == 1) return Verified{"empty", 0, 1};
  if (first == 1 && last == 2) return Verified{"point", 1, 2};
  return Verified{"monotone", first, last};
}

}  // namespace combex::tilings
