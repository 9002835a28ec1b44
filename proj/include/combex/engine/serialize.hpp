#pragma once

#include <stdexcept>
#include <string>

#include "combex/engine/specification.hpp"

namespace combex {

struct SpecFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {format: 1, root, classes: [{label, encoding}], rules: [{parent, children, strategy, kernel}]}
std::string spec_to_json(const Specification& spec);
Specification spec_from_json(const std::string& text);

// One node per class and one small hyperedge node per rule.
std::string spec_to_dot(const Specification& spec);

}  // namespace combex
