#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "combex/engine/class_label.hpp"

namespace combex {

enum class Phase {
  Initial,    // try inferral strategies, else run the initial strategies
  Expansion,  // run expansion set `expansion_set`
};

struct QueueJob {
  ClassLabel label;
  Phase phase = Phase::Initial;
  std::size_t expansion_set = 0;
  friend bool operator==(const QueueJob&, const QueueJob&) = default;
};

// Working / current / next scheduling of labels. New labels enter the working
// queue; after their initial job they wait in the next queue; once promoted to
// the current queue they are handed out once per expansion set.
class CSSQueue {
 public:
  explicit CSSQueue(std::size_t expansion_sets) : sets_(expansion_sets) {}

  // Ignored for labels that were added before.
  void add(ClassLabel l);

  // nullopt means every queue is drained.
  std::optional<QueueJob> next();

  // Drops a label whose inferral succeeded; call right after its Initial job.
  void retire(ClassLabel l);

  bool exhausted() const { return working_.empty() && current_.empty() && next_.empty(); }

 private:
  std::size_t sets_;
  std::deque<ClassLabel> working_, current_, next_;
  std::unordered_set<ClassLabel> seen_, retired_;
  std::unordered_map<ClassLabel, std::size_t> stage_;
};

}  // namespace combex
