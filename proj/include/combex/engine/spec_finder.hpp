#pragma once

#include <vector>

#include "combex/engine/specification.hpp"

namespace combex {

// Repeatedly deletes rules with a child that is no rule's parent. The survivors
// are the union of all specifications inside `rules`.
std::vector<Rule> prune_to_spec_union(std::vector<Rule> rules);

// Breadth-first from the root, taking for each class its smallest rule by
// (parent, children, strategy). Throws RootNotInUnion.
Specification extract_specification(const std::vector<Rule>& pruned, ClassLabel root);

// A specification with as few rules as possible, by depth-first branch and
// bound seeded with extract_specification. Candidates are tried in rule order,
// so ties keep the first one found. After `node_budget` search nodes the best
// specification so far is returned. Throws RootNotInUnion.
Specification extract_smallest_specification(const std::vector<Rule>& pruned, ClassLabel root,
                                             std::size_t node_budget = 2'000'000);

enum class Extraction { SmallestRule, FewestRules };

}  // namespace combex
