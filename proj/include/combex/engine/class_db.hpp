#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "combex/engine/class_label.hpp"

namespace combex {

template <class C>
concept Encodable = requires(const C& c) {
  { c.encode() } -> std::convertible_to<std::string>;
};

// Assigns consecutive labels to canonical encodings.
template <Encodable C>
class ClassDB {
 public:
  struct Added {
    ClassLabel label;
    bool is_new = false;
  };

  Added add(const C& c) {
    std::string key = c.encode();
    auto it = index_.find(key);
    if (it != index_.end()) return {it->second, false};
    const ClassLabel l{static_cast<std::uint32_t>(classes_.size())};
    index_.emplace(key, l);
    encodings_.push_back(std::move(key));
    classes_.push_back(c);
    return {l, true};
  }

  const C& get(ClassLabel l) const { return classes_.at(l.id); }
  const std::string& encoding(ClassLabel l) const { return encodings_.at(l.id); }
  std::size_t size() const { return classes_.size(); }

 private:
  std::unordered_map<std::string, ClassLabel> index_;
  std::vector<std::string> encodings_;
  std::vector<C> classes_;
};

}  // namespace combex
