#include "combex/engine/rule_db.hpp"

namespace combex {

bool RuleDB::add(Rule rule) {
  if (!keys_.emplace(rule.parent, rule.children, rule.strategy).second) return false;
  rules_.push_back(std::move(rule));
  return true;
}

}  // namespace combex
