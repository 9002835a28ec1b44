#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "combex/engine/strategy.hpp"
#include "combex/integer.hpp"

namespace combex::words {

struct InvalidFactor : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Binary words avoiding every forbidden factor (as contiguous subwords) whose
// history ends in `state`: the longest suffix that is a proper prefix of some
// forbidden factor.
class WordClass {
 public:
  // Forbidden factors are nonempty strings over {0,1}; redundant ones are dropped.
  explicit WordClass(std::vector<std::string> forbidden, std::string state = "");

  const std::vector<std::string>& forbidden() const { return forbidden_; }
  const std::string& state() const { return state_; }
  std::string encode() const;

  friend bool operator==(const WordClass&, const WordClass&) = default;

 private:
  std::vector<std::string> forbidden_;
  std::string state_;
};

// Splits by the first letter appended: a ShiftedDisjointUnion over the letters
// that complete no forbidden factor, or a Verified rule when neither letter
// is allowed.
Decomposition<WordClass> word_expand(const WordClass& w);

StrategyPack<WordClass> words_pack();

// Words of length 0..max_length avoiding the factors, by direct enumeration.
std::vector<Integer> count_words_brute(const std::vector<std::string>& forbidden, std::size_t max_length);

// Parses "11,101"; empty text forbids nothing.
std::vector<std::string> parse_factors(const std::string& text);

}  // namespace combex::words
