#pragma once

#include <set>
#include <vector>

#include "combex/engine/rule.hpp"

namespace combex {

// Non-equivalence rules found during exploration, in discovery order.
class RuleDB {
 public:
  // Returns false if an identical rule was already stored.
  bool add(Rule rule);
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }

 private:
  std::vector<Rule> rules_;
  std::set<std::tuple<ClassLabel, std::vector<ClassLabel>, std::string>> keys_;
};

}  // namespace combex
