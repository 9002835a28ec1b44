#include "combex/engine/spec_finder.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace combex {

void Specification::validate() const {
  if (!rules.count(root)) throw InvalidSpecification("root has no rule");
  for (const auto& [label, rule] : rules) {
    if (rule.parent != label) throw InvalidSpecification("rule keyed under the wrong label");
    if (is_equivalence(rule.kernel)) throw InvalidSpecification("specification contains an equivalence rule");
    if (rule.children.size() != arity(rule.kernel)) throw InvalidSpecification("kernel arity mismatch");
    for (ClassLabel c : rule.children) {
      if (!rules.count(c)) throw InvalidSpecification("class " + std::to_string(c.id) + " has no rule");
    }
  }
}

std::vector<ClassLabel> Specification::labels() const {
  std::vector<ClassLabel> out;
  out.reserve(rules.size());
  for (const auto& entry : rules) out.push_back(entry.first);
  return out;
}

std::vector<Rule> prune_to_spec_union(std::vector<Rule> rules) {
  std::unordered_map<ClassLabel, std::size_t> lhs_count;
  std::unordered_map<ClassLabel, std::vector<std::size_t>> used_in;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    ++lhs_count[rules[i].parent];
    for (ClassLabel c : rules[i].children) used_in[c].push_back(i);
  }
  std::vector<bool> alive(rules.size(), true);
  std::deque<ClassLabel> dead;
  std::set<ClassLabel> queued;
  for (const auto& [label, uses] : used_in) {
    if (!lhs_count.count(label) && queued.insert(label).second) dead.push_back(label);
  }
  while (!dead.empty()) {
    const ClassLabel l = dead.front();
    dead.pop_front();
    for (std::size_t i : used_in[l]) {
      if (!alive[i]) continue;
      alive[i] = false;
      if (--lhs_count[rules[i].parent] == 0 && queued.insert(rules[i].parent).second) {
        dead.push_back(rules[i].parent);
      }
    }
  }
  std::vector<Rule> out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (alive[i]) out.push_back(std::move(rules[i]));
  }
  return out;
}

Specification extract_specification(const std::vector<Rule>& pruned, ClassLabel root) {
  std::unordered_map<ClassLabel, const Rule*> best;
  for (const Rule& r : pruned) {
    auto [it, inserted] = best.emplace(r.parent, &r);
    if (!inserted && r < *it->second) it->second = &r;
  }
  if (!best.count(root)) throw RootNotInUnion("root " + std::to_string(root.id) + " is not in the specification union");
  Specification spec;
  spec.root = root;
  std::deque<ClassLabel> frontier{root};
  std::set<ClassLabel> seen{root};
  while (!frontier.empty()) {
    const ClassLabel l = frontier.front();
    frontier.pop_front();
    const Rule& r = *best.at(l);
    spec.rules.emplace(l, r);
    for (ClassLabel c : r.children) {
      if (seen.insert(c).second) frontier.push_back(c);
    }
  }
  return spec;
}

namespace {

class SmallestSpecSearch {
 public:
  SmallestSpecSearch(const std::vector<Rule>& pruned, std::size_t budget) : budget_(budget) {
    for (const Rule& r : pruned) candidates_[r.parent].push_back(&r);
    for (auto& [label, rules] : candidates_) {
      std::sort(rules.begin(), rules.end(), [](const Rule* a, const Rule* b) { return *a < *b; });
      // Rules with the same children lead to the same search below.
      rules.erase(std::unique(rules.begin(), rules.end(),
                              [](const Rule* a, const Rule* b) { return a->children == b->children; }),
                  rules.end());
    }
  }

  bool has(ClassLabel l) const { return candidates_.count(l) > 0; }

  std::map<ClassLabel, const Rule*> run(ClassLabel root, std::map<ClassLabel, const Rule*> seed) {
    best_ = std::move(seed);
    pending_ = {root};
    search();
    return best_;
  }

 private:
  void search() {
    if (nodes_ >= budget_) return;
    ++nodes_;
    if (chosen_.size() + pending_.size() >= best_.size()) return;
    if (pending_.empty()) {
      best_ = chosen_;
      return;
    }
    // Branch on the pending class with the fewest candidate rules.
    auto pick = std::min_element(pending_.begin(), pending_.end(), [&](ClassLabel a, ClassLabel b) {
      return std::make_pair(candidates_.at(a).size(), a) < std::make_pair(candidates_.at(b).size(), b);
    });
    const ClassLabel l = *pick;
    pending_.erase(pick);
    for (const Rule* r : candidates_.at(l)) {
      chosen_.emplace(l, r);
      std::vector<ClassLabel> added;
      for (ClassLabel c : r->children) {
        if (!chosen_.count(c) && pending_.insert(c).second) added.push_back(c);
      }
      search();
      for (ClassLabel c : added) pending_.erase(c);
      chosen_.erase(l);
    }
    pending_.insert(l);
  }

  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::map<ClassLabel, std::vector<const Rule*>> candidates_;
  std::map<ClassLabel, const Rule*> chosen_;
  std::set<ClassLabel> pending_;
  std::map<ClassLabel, const Rule*> best_;
};

}  // namespace

Specification extract_smallest_specification(const std::vector<Rule>& pruned, ClassLabel root,
                                             std::size_t node_budget) {
  const Specification seed = extract_specification(pruned, root);
  SmallestSpecSearch search(pruned, node_budget);
  std::map<ClassLabel, const Rule*> start;
  for (const auto& [label, rule] : seed.rules) {
    auto it = std::find(pruned.begin(), pruned.end(), rule);
    start.emplace(label, &*it);
  }
  Specification spec;
  spec.root = root;
  for (const auto& [label, rule] : search.run(root, std::move(start))) spec.rules.emplace(label, *rule);
  return spec;
}

}  // namespace combex
