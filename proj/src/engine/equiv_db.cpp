#include "combex/engine/equiv_db.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace combex {

void EquivDB::ensure(std::uint32_t id) const {
  while (parent_.size() <= id) parent_.push_back(static_cast<std::uint32_t>(parent_.size()));
}

ClassLabel EquivDB::find(ClassLabel l) const {
  ensure(l.id);
  std::uint32_t root = l.id;
  while (parent_[root] != root) root = parent_[root];
  for (std::uint32_t cur = l.id; parent_[cur] != root;) {
    const std::uint32_t next = parent_[cur];
    parent_[cur] = root;
    cur = next;
  }
  return ClassLabel{root};
}

void EquivDB::unite(const Rule& rule) {
  if (rule.children.size() != 1) throw std::invalid_argument("equivalence rule must have one child");
  const std::uint32_t a = rule.parent.id;
  const std::uint32_t b = rule.children[0].id;
  ensure(std::max(a, b));
  if (edges_.size() <= std::max(a, b)) edges_.resize(std::max(a, b) + 1);
  const std::size_t index = rules_.size();
  rules_.push_back(rule);
  edges_[a].emplace_back(b, index);
  edges_[b].emplace_back(a, index);
  const ClassLabel ra = find(rule.parent);
  const ClassLabel rb = find(rule.children[0]);
  if (ra == rb) return;
  if (ra < rb) {
    parent_[rb.id] = ra.id;
  } else {
    parent_[ra.id] = rb.id;
  }
}

std::vector<Rule> EquivDB::path(ClassLabel a, ClassLabel b) const {
  if (!equivalent(a, b)) {
    throw NotEquivalent("labels " + std::to_string(a.id) + " and " + std::to_string(b.id) + " are not equivalent");
  }
  if (a == b) return {};
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> via(edges_.size(), kNone);
  std::vector<std::uint32_t> prev(edges_.size(), 0);
  std::vector<bool> seen(edges_.size(), false);
  std::deque<std::uint32_t> frontier{a.id};
  seen[a.id] = true;
  while (!frontier.empty()) {
    const std::uint32_t cur = frontier.front();
    frontier.pop_front();
    if (cur == b.id) break;
    for (const auto& [next, rule] : edges_[cur]) {
      if (seen[next]) continue;
      seen[next] = true;
      via[next] = rule;
      prev[next] = cur;
      frontier.push_back(next);
    }
  }
  std::vector<Rule> out;
  for (std::uint32_t cur = b.id; cur != a.id; cur = prev[cur]) out.push_back(rules_[via[cur]]);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace combex
