#include "combex/transfer/audit.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace combex {

std::vector<RuleAudit> audit_productivity(const Specification& spec,
                                          const std::map<ClassLabel, std::vector<Integer>>& counts) {
  std::size_t top = std::numeric_limits<std::size_t>::max();
  for (const auto& [label, rule] : spec.rules) {
    auto it = counts.find(label);
    if (it == counts.end() || it->second.empty()) {
      throw std::invalid_argument("no counts for class " + std::to_string(label.id));
    }
    top = std::min(top, it->second.size() - 1);
  }
  std::vector<RuleAudit> out;
  for (const auto& [label, rule] : spec.rules) {
    RuleAudit audit{label, true, {}};
    const auto& parent = counts.at(label);
    std::vector<bool> same_size(rule.children.size(), false);
    for (std::size_t n = 0; n <= top; ++n) {
      const auto profile = reliance_profile(rule.kernel, n);
      for (std::size_t i = 0; i < profile.size(); ++i) {
        if (!profile[i]) continue;
        if (*profile[i] > n) {
          audit.pass = false;
          audit.reasons.push_back("condition 1: child " + std::to_string(i) + " needed beyond size " +
                                  std::to_string(n));
        }
        if (*profile[i] == n) same_size[i] = true;
      }
    }
    for (std::size_t i = 0; i < rule.children.size(); ++i) {
      if (!same_size[i]) continue;
      const auto& child = counts.at(rule.children[i]);
      bool bounded = true;
      bool strictly_smaller = false;
      for (std::size_t n = 0; n <= top; ++n) {
        if (child[n] > parent[n]) bounded = false;
        if (child[n] < parent[n]) strictly_smaller = true;
      }
      if (!bounded) {
        audit.pass = false;
        audit.reasons.push_back("condition 2(a): child " + std::to_string(i) + " outnumbers the parent");
      }
      if (!strictly_smaller) {
        audit.pass = false;
        audit.reasons.push_back("condition 2(b): child " + std::to_string(i) + " never smaller than the parent");
      }
    }
    out.push_back(std::move(audit));
  }
  return out;
}

bool all_pass(const std::vector<RuleAudit>& audits) {
  return std::all_of(audits.begin(), audits.end(), [](const RuleAudit& a) { return a.pass; });
}

}  // namespace combex
