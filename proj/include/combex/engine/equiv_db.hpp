#pragma once

#include <stdexcept>
#include <vector>

#include "combex/engine/rule.hpp"

namespace combex {

struct NotEquivalent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Union-find over labels that also remembers which equivalence rules joined them.
// The representative of a class is always its smallest label.
class EquivDB {
 public:
  ClassLabel find(ClassLabel l) const;
  bool equivalent(ClassLabel a, ClassLabel b) const { return find(a) == find(b); }

  // Records an equivalence rule parent <-> child.
  void unite(const Rule& rule);

  // Shortest chain of recorded equivalence rules linking a to b.
  std::vector<Rule> path(ClassLabel a, ClassLabel b) const;

  const std::vector<Rule>& rules() const { return rules_; }

 private:
  void ensure(std::uint32_t id) const;

  mutable std::vector<std::uint32_t> parent_;
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> edges_;
  std::vector<Rule> rules_;
};

}  // namespace combex
