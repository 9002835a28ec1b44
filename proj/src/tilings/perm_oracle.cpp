#include "combex/tilings/perm_oracle.hpp"

#include <algorithm>

namespace combex::tilings {

bool perm_contains(const std::vector<int>& perm, const std::vector<int>& patt) {
  const std::size_t n = perm.size();
  const std::size_t k = patt.size();
  if (k > n) return false;
  if (k == 0) return true;
  std::vector<std::size_t> chosen(k);
  // Iterative backtracking over increasing index tuples.
  std::size_t depth = 0;
  std::size_t next = 0;
  for (;;) {
    bool placed = false;
    for (std::size_t i = next; i + (k - depth) <= n; ++i) {
      bool ok = true;
      for (std::size_t l = 0; l < depth && ok; ++l) ok = (perm[i] < perm[chosen[l]]) == (patt[depth] < patt[l]);
      if (!ok) continue;
      chosen[depth] = i;
      placed = true;
      break;
    }
    if (placed) {
      if (++depth == k) return true;
      next = chosen[depth - 1] + 1;
      continue;
    }
    if (depth == 0) return false;
    --depth;
    next = chosen[depth] + 1;
  }
}

std::vector<Integer> count_avoiders(const std::vector<std::vector<int>>& basis, std::size_t max_size) {
  // Avoiders of size n arise from avoiders of size n - 1 by inserting a new maximum.
  std::vector<Integer> out{1};
  std::vector<std::vector<int>> level{{}};
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<std::vector<int>> next;
    for (const auto& p : level) {
      for (std::size_t pos = 0; pos <= p.size(); ++pos) {
        std::vector<int> q(p);
        q.insert(q.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<int>(n - 1));
        const bool bad = std::any_of(basis.begin(), basis.end(), [&](const auto& b) { return perm_contains(q, b); });
        if (!bad) next.push_back(std::move(q));
      }
    }
    out.emplace_back(next.size());
    level = std::move(next);
  }
  return out;
}

}  // namespace combex::tilings
