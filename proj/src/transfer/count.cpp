#include "combex/transfer/count.hpp"

#include <string>
#include <unordered_map>

namespace combex {

CycleDetected::CycleDetected(ClassLabel l, std::size_t size)
    : std::runtime_error("class " + std::to_string(l.id) + " relies on itself at size " + std::to_string(size)),
      label(l),
      n(size) {}

namespace {

class Counter {
 public:
  Counter(const Specification& spec, TermTable& table) : spec_(spec), table_(table) {
    for (const auto& [label, rule] : spec.rules) {
      table_.terms[label];
      if (const auto* p = std::get_if<Product>(&rule.kernel)) prefix_[label].assign(p->arity, {});
    }
  }

  // Computes size n for every class; all smaller sizes must already be known.
  void step(std::size_t n) {
    state_.clear();
    for (const auto& [label, rule] : spec_.rules) value(label, n);
  }

 private:
  enum class Mark { Active, Done };

  const Integer& value(ClassLabel l, std::size_t n) {
    auto& terms = table_.terms.at(l);
    if (terms.size() > n) return terms[n];
    auto [it, inserted] = state_.emplace(l, Mark::Active);
    if (!inserted) throw CycleDetected(l, n);
    Integer v = evaluate(spec_.rules.at(l), n);
    terms.push_back(std::move(v));
    it->second = Mark::Done;
    return terms[n];
  }

  Integer evaluate(const Rule& rule, std::size_t n) {
    if (const auto* v = std::get_if<Verified>(&rule.kernel)) return v->term(n);
    if (std::holds_alternative<DisjointUnion>(rule.kernel) || std::holds_alternative<Equivalence>(rule.kernel)) {
      Integer sum = 0;
      for (ClassLabel c : rule.children) sum += value(c, n);
      return sum;
    }
    if (const auto* s = std::get_if<ShiftedDisjointUnion>(&rule.kernel)) {
      Integer sum = n < s->base_terms.size() ? s->base_terms[n] : Integer(0);
      if (n >= s->shift) {
        for (ClassLabel c : rule.children) sum += value(c, n - s->shift);
      }
      return sum;
    }
    return product(rule, std::get<Product>(rule.kernel), n);
  }

  Integer mul(const Integer& a, const Integer& b) {
    ++table_.multiplications;
    return a * b;
  }

  // prefix[j][i] is the i-th coefficient of B_1 * ... * B_{j+1}. Entries below
  // the current size are exact; the entry at the current size is computed with
  // the restricted children's top terms taken as zero, which leaves the last
  // prefix (the answer) unchanged because each such term meets a zero constant.
  Integer product(const Rule& rule, const Product& p, std::size_t n) {
    if (n < p.shift) return 0;
    const std::size_t m = n - p.shift;
    const std::size_t k = p.arity;
    auto& prefix = prefix_.at(rule.parent);
    auto child = [&](std::size_t j, std::size_t i) -> const Integer& { return value(rule.children[j], i); };
    // Finalize every index below m.
    for (std::size_t i = exact_.count(rule.parent) ? exact_[rule.parent] : 0; i < m; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        prefix[j].resize(i + 1);
        if (j == 0) {
          prefix[0][i] = child(0, i);
          continue;
        }
        Integer sum = 0;
        for (std::size_t s = 0; s <= i; ++s) sum += mul(prefix[j - 1][i - s], child(j, s));
        prefix[j][i] = std::move(sum);
      }
      exact_[rule.parent] = i + 1;
    }
    if (m == 0) {
      if (!p.reliance_set.empty()) return 0;
      Integer prod = 1;
      for (std::size_t j = 0; j < k; ++j) prod = mul(prod, child(j, 0));
      return prod;
    }
    Integer top = p.restricted(0) ? Integer(0) : child(0, m);
    for (std::size_t j = 1; j < k; ++j) {
      Integer sum = mul(top, child(j, 0));
      for (std::size_t s = 1; s < m; ++s) sum += mul(prefix[j - 1][m - s], child(j, s));
      if (!p.restricted(j)) sum += mul(prefix[j - 1][0], child(j, m));
      top = std::move(sum);
    }
    return top;
  }

  const Specification& spec_;
  TermTable& table_;
  std::unordered_map<ClassLabel, Mark> state_;
  std::unordered_map<ClassLabel, std::vector<std::vector<Integer>>> prefix_;
  std::unordered_map<ClassLabel, std::size_t> exact_;
};

}  // namespace

TermTable count_all_terms(const Specification& spec, std::size_t max_size) {
  spec.validate();
  TermTable table;
  Counter counter(spec, table);
  for (std::size_t n = 0; n <= max_size; ++n) counter.step(n);
  return table;
}

std::vector<Integer> count_terms(const Specification& spec, std::size_t max_size) {
  return count_all_terms(spec, max_size).terms.at(spec.root);
}

}  // namespace combex
