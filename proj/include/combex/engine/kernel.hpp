#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "combex/integer.hpp"

namespace combex {

// a_n = sum of the children's n-th terms.
struct DisjointUnion {
  std::size_t arity = 0;
  friend bool operator==(const DisjointUnion&, const DisjointUnion&) = default;
};

// a_n = base[n] + sum of the children's (n - shift)-th terms.
struct ShiftedDisjointUnion {
  std::size_t arity = 0;
  std::size_t shift = 1;
  std::vector<Integer> base_terms;
  friend bool operator==(const ShiftedDisjointUnion&, const ShiftedDisjointUnion&) = default;
};

// a_n = sum over i_1 + ... + i_m = n - shift of prod b^(l)_{i_l}, where children
// listed in reliance_set never contribute their (n - shift)-th term.
struct Product {
  std::size_t arity = 0;
  std::vector<std::size_t> reliance_set;  // sorted, 0-based child indices
  std::size_t shift = 0;
  bool restricted(std::size_t child) const;
  friend bool operator==(const Product&, const Product&) = default;
};

// a_n = b_n for the single child.
struct Equivalence {
  friend bool operator==(const Equivalence&, const Equivalence&) = default;
};

// Terms are 1 for first <= n < last (last absent means unbounded) and 0 otherwise.
struct Verified {
  std::string kind;
  std::size_t first = 0;
  std::optional<std::size_t> last;
  Integer term(std::size_t n) const;
  friend bool operator==(const Verified&, const Verified&) = default;
};

using CountingKernel = std::variant<DisjointUnion, ShiftedDisjointUnion, Product, Equivalence, Verified>;

std::size_t arity(const CountingKernel& k);
bool is_equivalence(const CountingKernel& k);
bool is_verified(const CountingKernel& k);
std::string kernel_name(const CountingKernel& k);

// For each child, the largest size whose term is needed to produce the parent's
// n-th term, or nullopt if no term of that child is needed.
std::vector<std::optional<std::size_t>> reliance_profile(const CountingKernel& k, std::size_t n);

// Evaluates the kernel at n given the children's complete term tables.
Integer apply_kernel(const CountingKernel& k, std::size_t n, const std::vector<std::vector<Integer>>& child_terms);

}  // namespace combex
