#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "combex/engine/class_label.hpp"
#include "combex/engine/kernel.hpp"

namespace combex {

struct Rule {
  ClassLabel parent;
  std::vector<ClassLabel> children;
  std::string strategy;
  CountingKernel kernel;

  auto key() const { return std::tie(parent, children, strategy); }
};

// Rules are identified by (parent, children, strategy); the kernel follows from those.
inline bool operator==(const Rule& a, const Rule& b) { return a.key() == b.key(); }
inline bool operator<(const Rule& a, const Rule& b) { return a.key() < b.key(); }

}  // namespace combex
