#pragma once

#include <map>
#include <string>
#include <vector>

#include "combex/engine/specification.hpp"
#include "combex/integer.hpp"

namespace combex {

struct RuleAudit {
  ClassLabel parent;
  bool pass = true;
  std::vector<std::string> reasons;  // one per failed condition
};

// Checks every rule against independent counts for sizes 0..N (the shortest
// table bounds N): reliances never exceed the parent's size, and a child relied
// on at the parent's own size never outnumbers the parent and is strictly
// smaller at some size.
std::vector<RuleAudit> audit_productivity(const Specification& spec,
                                          const std::map<ClassLabel, std::vector<Integer>>& counts);

bool all_pass(const std::vector<RuleAudit>& audits);

}  // namespace combex
