#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "combex/engine/rule.hpp"

namespace combex {

struct RootNotInUnion : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidSpecification : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One rule per class, closed under taking children. Labels are equivalence
// class representatives.
struct Specification {
  ClassLabel root;
  std::map<ClassLabel, Rule> rules;
  std::map<ClassLabel, std::string> encodings;

  // Throws InvalidSpecification when a child has no rule or a rule is keyed wrongly.
  void validate() const;
  std::vector<ClassLabel> labels() const;
};

}  // namespace combex
