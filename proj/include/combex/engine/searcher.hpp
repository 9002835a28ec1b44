#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "combex/engine/class_db.hpp"
#include "combex/engine/equiv_db.hpp"
#include "combex/engine/queue.hpp"
#include "combex/engine/rule_db.hpp"
#include "combex/engine/spec_finder.hpp"
#include "combex/engine/strategy.hpp"

namespace combex {

struct SearchLimits {
  std::size_t max_expansions = 200000;
  std::chrono::duration<double> max_time{300.0};
};

struct SearchOptions {
  std::size_t spec_check_interval = 1000;  // new rules between specification checks
  Extraction extraction = Extraction::SmallestRule;
  // Expansions to keep running after the first specification is found; the
  // specification is then extracted again from the larger rule set.
  std::size_t refine_expansions = 0;
};

struct ExplorationStatus {
  std::size_t classes_seen = 0;
  std::size_t rules_found = 0;
  bool spec_found = false;
  std::size_t expansions_performed = 0;
};

template <Encodable C>
class Searcher {
 public:
  Searcher(C root, StrategyPack<C> pack, SearchOptions options = {})
      : pack_(std::move(pack)), options_(options), queue_(pack_.expansion.size()) {
    root_ = label_of(root);
  }

  ExplorationStatus run(const SearchLimits& limits) {
    const auto start = std::chrono::steady_clock::now();
    if (!spec_) check_for_specification();
    while (!spec_ || refined_ < options_.refine_expansions) {
      if (status_.expansions_performed >= limits.max_expansions) break;
      if (std::chrono::steady_clock::now() - start >= limits.max_time) break;
      const auto job = queue_.next();
      if (!job) break;
      run_job(*job);
      ++status_.expansions_performed;
      if (spec_) {
        ++refined_;
      } else if (rule_count() >= next_check_) {
        check_for_specification();
      }
    }
    if (!spec_ || refined_ > 0) check_for_specification();
    return status();
  }

  ExplorationStatus status() const {
    ExplorationStatus s = status_;
    s.classes_seen = classes_.size();
    s.rules_found = rule_count();
    s.spec_found = spec_.has_value();
    return s;
  }

  ClassLabel root() const { return root_; }
  const std::optional<Specification>& specification() const { return spec_; }
  const ClassDB<C>& classes() const { return classes_; }
  const RuleDB& rules() const { return rules_; }
  const EquivDB& equivalences() const { return equiv_; }

  // The discovered rule behind each rule of the specification, on raw labels.
  const std::map<ClassLabel, Rule>& spec_origins() const { return origins_; }

 private:
  std::size_t rule_count() const { return rules_.size() + equiv_.rules().size(); }

  ClassLabel label_of(const C& c) {
    const auto added = classes_.add(c);
    if (!added.is_new) return added.label;
    // Verification is attempted once, when the class is first labelled.
    for (const auto& strategy : pack_.verification) {
      auto found = strategy.apply(c);
      if (found.empty()) continue;
      auto& d = found.front();
      rules_.add(Rule{added.label, {}, std::move(d.strategy), std::move(d.kernel)});
      verified_.push_back(added.label);
      return added.label;
    }
    queue_.add(added.label);
    return added.label;
  }

  // Returns the number of decompositions recorded.
  std::size_t record(ClassLabel parent, const std::vector<Strategy<C>>& strategies, bool stop_at_first) {
    std::size_t recorded = 0;
    for (const auto& strategy : strategies) {
      // Copy: label_of may grow the class table and move the parent.
      const C parent_class = classes_.get(parent);
      for (auto& d : strategy.apply(parent_class)) {
        Rule rule{parent, {}, std::move(d.strategy), std::move(d.kernel)};
        for (const auto& child : d.children) rule.children.push_back(label_of(child));
        if (is_equivalence(rule.kernel)) {
          if (rule.children.front() != parent) equiv_.unite(rule);
        } else {
          rules_.add(std::move(rule));
        }
        ++recorded;
      }
      if (stop_at_first && recorded > 0) break;
    }
    return recorded;
  }

  void run_job(const QueueJob& job) {
    if (job.phase == Phase::Initial) {
      if (record(job.label, pack_.inferral, true) > 0) {
        queue_.retire(job.label);
        return;
      }
      record(job.label, pack_.initial, false);
      return;
    }
    record(job.label, pack_.expansion.at(job.expansion_set), false);
  }

  void check_for_specification() {
    next_check_ = rule_count() + options_.spec_check_interval;
    std::vector<Rule> mapped;
    std::map<std::tuple<ClassLabel, std::vector<ClassLabel>, std::string>, const Rule*> source;
    mapped.reserve(rules_.size());
    for (const Rule& r : rules_.rules()) {
      Rule m = r;
      m.parent = equiv_.find(r.parent);
      for (auto& c : m.children) c = equiv_.find(c);
      source.emplace(std::make_tuple(m.parent, m.children, m.strategy), &r);
      mapped.push_back(std::move(m));
    }
    const ClassLabel root = equiv_.find(root_);
    auto pruned = prune_to_spec_union(std::move(mapped));
    bool has_root = false;
    for (const Rule& r : pruned) has_root = has_root || r.parent == root;
    if (!has_root) return;
    Specification spec = options_.extraction == Extraction::FewestRules ? extract_smallest_specification(pruned, root)
                                                                        : extract_specification(pruned, root);
    origins_.clear();
    for (const auto& [label, rule] : spec.rules) {
      spec.encodings[label] = classes_.encoding(label);
      origins_.emplace(label, *source.at(std::make_tuple(rule.parent, rule.children, rule.strategy)));
    }
    spec_ = std::move(spec);
  }

  StrategyPack<C> pack_;
  SearchOptions options_;
  ClassDB<C> classes_;
  RuleDB rules_;
  EquivDB equiv_;
  CSSQueue queue_;
  ClassLabel root_;
  std::vector<ClassLabel> verified_;
  ExplorationStatus status_;
  std::size_t next_check_ = 0;
  std::size_t refined_ = 0;
  std::optional<Specification> spec_;
  std::map<ClassLabel, Rule> origins_;
};

}  // namespace combex
