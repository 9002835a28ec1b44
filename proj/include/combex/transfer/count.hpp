#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "combex/engine/specification.hpp"
#include "combex/integer.hpp"

namespace combex {

struct CycleDetected : std::runtime_error {
  CycleDetected(ClassLabel label, std::size_t n);
  ClassLabel label;
  std::size_t n;
};

struct TermTable {
  std::map<ClassLabel, std::vector<Integer>> terms;  // sizes 0..N for every class
  std::size_t multiplications = 0;                   // big-integer products performed
};

// Terms of every class for sizes 0..max_size. Throws CycleDetected when a class
// relies on itself at the same size.
TermTable count_all_terms(const Specification& spec, std::size_t max_size);

// The root's terms for sizes 0..max_size.
std::vector<Integer> count_terms(const Specification& spec, std::size_t max_size);

}  // namespace combex
