#include "combex/words/words.hpp"

#include <algorithm>

namespace combex::words {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Longest suffix of w that is a proper prefix of some forbidden factor.
std::string reduce(const std::string& w, const std::vector<std::string>& forbidden) {
  for (std::size_t start = 0; start <= w.size(); ++start) {
    const std::string suffix = w.substr(start);
    for (const auto& f : forbidden) {
      if (suffix.size() < f.size() && f.compare(0, suffix.size(), suffix) == 0) return suffix;
    }
  }
  return "";
}

}  // namespace

WordClass::WordClass(std::vector<std::string> forbidden, std::string state) {
  for (const auto& f : forbidden) {
    if (f.empty() || f.find_first_not_of("01") != std::string::npos) throw InvalidFactor("bad factor '" + f + "'");
  }
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  // A factor containing another forbidden factor can never be the first one completed.
  for (const auto& f : forbidden) {
    const bool redundant = std::any_of(forbidden.begin(), forbidden.end(), [&](const std::string& g) {
      return g != f && f.find(g) != std::string::npos;
    });
    if (!redundant) forbidden_.push_back(f);
  }
  state_ = reduce(state, forbidden_);
}

std::string WordClass::encode() const {
  std::string out = "forbid=";
  for (std::size_t i = 0; i < forbidden_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += forbidden_[i];
  }
  return out + ";state=" + state_;
}

Decomposition<WordClass> word_expand(const WordClass& w) {
  std::vector<WordClass> children;
  for (char letter : {'0', '1'}) {
    const std::string next = w.state() + letter;
    const bool completes = std::any_of(w.forbidden().begin(), w.forbidden().end(),
                                       [&](const std::string& f) { return ends_with(next, f); });
    if (!completes) children.emplace_back(w.forbidden(), next);
  }
  if (children.empty()) return {"word_expand", {}, Verified{"empty_word", 0, 1}};
  const std::size_t m = children.size();
  return {"word_expand", std::move(children), ShiftedDisjointUnion{m, 1, {Integer(1)}}};
}

StrategyPack<WordClass> words_pack() {
  StrategyPack<WordClass> pack;
  pack.expansion.push_back(
      {{"word_expand", [](const WordClass& w) { return std::vector<Decomposition<WordClass>>{word_expand(w)}; }}});
  return pack;
}

std::vector<Integer> count_words_brute(const std::vector<std::string>& forbidden, std::size_t max_length) {
  std::vector<Integer> out;
  for (std::size_t n = 0; n <= max_length; ++n) {
    std::size_t count = 0;
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      std::string w(n, '0');
      for (std::size_t i = 0; i < n; ++i) {
        if (bits >> (n - 1 - i) & 1U) w[i] = '1';
      }
      const bool bad = std::any_of(forbidden.begin(), forbidden.end(),
                                   [&](const std::string& f) { return w.find(f) != std::string::npos; });
      if (!bad) ++count;
    }
    out.emplace_back(count);
  }
  return out;
}

std::vector<std::string> parse_factors(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  if (text.empty()) return out;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (out.back().empty() || out.back().find_first_not_of("01") != std::string::npos) {
      throw InvalidFactor("bad factor '" + out.back() + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace combex::words
