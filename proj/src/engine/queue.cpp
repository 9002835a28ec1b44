#include "combex/engine/queue.hpp"

namespace combex {

void CSSQueue::add(ClassLabel l) {
  if (seen_.insert(l).second) working_.push_back(l);
}

void CSSQueue::retire(ClassLabel l) {
  if (!next_.empty() && next_.back() == l) {
    next_.pop_back();
  } else {
    retired_.insert(l);
  }
}

std::optional<QueueJob> CSSQueue::next() {
  if (!working_.empty()) {
    const ClassLabel l = working_.front();
    working_.pop_front();
    if (sets_ > 0) next_.push_back(l);
    return QueueJob{l, Phase::Initial, 0};
  }
  for (;;) {
    while (!current_.empty()) {
      const ClassLabel l = current_.front();
      current_.pop_front();
      if (retired_.count(l)) continue;
      const std::size_t stage = stage_[l]++;
      if (stage + 1 < sets_) current_.push_back(l);
      return QueueJob{l, Phase::Expansion, stage};
    }
    if (next_.empty()) return std::nullopt;
    current_.swap(next_);
  }
}

}  // namespace combex
