#include "combex/engine/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace combex {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

bool Product::restricted(std::size_t child) const {
  return std::binary_search(reliance_set.begin(), reliance_set.end(), child);
}

Integer Verified::term(std::size_t n) const {
  return (n >= first && (!last || n < *last)) ? Integer(1) : Integer(0);
}

std::size_t arity(const CountingKernel& k) {
  return std::visit(Overloaded{
                        [](const DisjointUnion& d) { return d.arity; },
                        [](const ShiftedDisjointUnion& s) { return s.arity; },
                        [](const Product& p) { return p.arity; },
                        [](const Equivalence&) { return std::size_t{1}; },
                        [](const Verified&) { return std::size_t{0}; },
                    },
                    k);
}

bool is_equivalence(const CountingKernel& k) { return std::holds_alternative<Equivalence>(k); }
bool is_verified(const CountingKernel& k) { return std::holds_alternative<Verified>(k); }

std::string kernel_name(const CountingKernel& k) {
  return std::visit(Overloaded{
                        [](const DisjointUnion&) { return std::string("disjoint_union"); },
                        [](const ShiftedDisjointUnion&) { return std::string("shifted_disjoint_union"); },
                        [](const Product&) { return std::string("product"); },
                        [](const Equivalence&) { return std::string("equivalence"); },
                        [](const Verified&) { return std::string("verified"); },
                    },
                    k);
}

std::vector<std::optional<std::size_t>> reliance_profile(const CountingKernel& k, std::size_t n) {
  return std::visit(
      Overloaded{
          [n](const DisjointUnion& d) { return std::vector<std::optional<std::size_t>>(d.arity, n); },
          [n](const ShiftedDisjointUnion& s) {
            std::optional<std::size_t> r;
            if (n >= s.shift) r = n - s.shift;
            return std::vector<std::optional<std::size_t>>(s.arity, r);
          },
          [n](const Product& p) {
            std::vector<std::optional<std::size_t>> out(p.arity);
            if (n < p.shift) return out;
            const std::size_t m = n - p.shift;
            for (std::size_t i = 0; i < p.arity; ++i) {
              if (!p.restricted(i)) {
                out[i] = m;
              } else if (m > 0) {
                out[i] = m - 1;
              }
            }
            return out;
          },
          [n](const Equivalence&) { return std::vector<std::optional<std::size_t>>{n}; },
          [](const Verified&) { return std::vector<std::optional<std::size_t>>{}; },
      },
      k);
}

namespace {

// Brute-force S-restricted convolution; used where speed does not matter.
Integer restricted_convolution(const Product& p, std::size_t total, const std::vector<std::vector<Integer>>& b,
                               std::size_t child, Integer acc) {
  if (acc == 0) return 0;
  if (child + 1 == p.arity) {
    return acc * b[child].at(total);
  }
  Integer sum = 0;
  for (std::size_t i = 0; i <= total; ++i) {
    sum += restricted_convolution(p, total - i, b, child + 1, acc * b[child].at(i));
  }
  return sum;
}

}  // namespace

Integer apply_kernel(const CountingKernel& k, std::size_t n, const std::vector<std::vector<Integer>>& b) {
  if (b.size() != arity(k)) throw std::invalid_argument("apply_kernel: wrong number of child tables");
  return std::visit(
      Overloaded{
          [&](const DisjointUnion&) {
            Integer s = 0;
            for (const auto& t : b) s += t.at(n);
            return s;
          },
          [&](const ShiftedDisjointUnion& s) {
            Integer v = n < s.base_terms.size() ? s.base_terms[n] : Integer(0);
            if (n >= s.shift) {
              for (const auto& t : b) v += t.at(n - s.shift);
            }
            return v;
          },
          [&](const Product& p) {
            if (n < p.shift) return Integer(0);
            const std::size_t m = n - p.shift;
            // Restricted children may not take the whole size; the excluded
            // tuples are dropped rather than read.
            std::vector<std::vector<Integer>> trimmed = b;
            for (std::size_t i = 0; i < p.arity; ++i) {
              if (p.restricted(i)) {
                trimmed[i].resize(std::max<std::size_t>(trimmed[i].size(), m + 1));
                trimmed[i][m] = 0;
              }
            }
            return restricted_convolution(p, m, trimmed, 0, Integer(1));
          },
          [&](const Equivalence&) { return b.at(0).at(n); },
          [&](const Verified& v) { return v.term(n); },
      },
      k);
}

}  // namespace combex
