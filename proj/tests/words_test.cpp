#include <gtest/gtest.h>

#include <random>
#include <set>

#include "combex/engine/searcher.hpp"
#include "combex/transfer/count.hpp"
#include "combex/words/words.hpp"

namespace combex::words {
namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Grows every avoiding word one letter at a time.
std::vector<Integer> grow_oracle(const std::vector<std::string>& forbidden, std::size_t max_length) {
  std::vector<Integer> out;
  std::vector<std::string> level{""};
  for (std::size_t n = 0; n <= max_length; ++n) {
    out.emplace_back(level.size());
    std::vector<std::string> next;
    for (const auto& w : level) {
      for (char c : {'0', '1'}) {
        const std::string x = w + c;
        bool ok = true;
        for (const auto& f : forbidden) ok = ok && x.find(f) == std::string::npos;
        if (ok) next.push_back(x);
      }
    }
    level = std::move(next);
  }
  return out;
}

struct Run {
  std::optional<Specification> spec;
  std::size_t classes = 0;
};

Run explore(const std::vector<std::string>& forbidden) {
  Searcher<WordClass> s(WordClass(forbidden), words_pack());
  s.run(SearchLimits{});
  return {s.specification(), s.classes().size()};
}

TEST(Words, AvoidingElevenIsFibonacci) {
  const auto run = explore({"11"});
  ASSERT_TRUE(run.spec);
  EXPECT_EQ(count_terms(*run.spec, 6), ints({1, 2, 3, 5, 8, 13, 21}));
}

TEST(Words, ChildrenOfTheEmptyState) {
  const auto d = word_expand(WordClass({"11"}));
  ASSERT_EQ(d.children.size(), 2u);
  EXPECT_EQ(d.children[0].state(), "");
  EXPECT_EQ(d.children[1].state(), "1");
  EXPECT_EQ(d.kernel, CountingKernel(ShiftedDisjointUnion{2, 1, ints({1})}));
  // After a 1 only a 0 may follow, which returns to the empty state.
  const auto after = word_expand(WordClass({"11"}, "1"));
  ASSERT_EQ(after.children.size(), 1u);
  EXPECT_EQ(after.children[0], WordClass({"11"}));
}

TEST(Words, BothLettersForbidden) {
  const auto run = explore({"0", "1"});
  ASSERT_TRUE(run.spec);
  EXPECT_EQ(count_terms(*run.spec, 3), ints({1, 0, 0, 0}));
}

TEST(Words, NothingForbidden) {
  const auto run = explore({});
  ASSERT_TRUE(run.spec);
  EXPECT_EQ(count_terms(*run.spec, 6), ints({1, 2, 4, 8, 16, 32, 64}));
}

TEST(Words, CanonicalFactorSet) {
  const WordClass w({"110", "11", "0110", "11"}, "0101");
  EXPECT_EQ(w.forbidden(), (std::vector<std::string>{"11"}));
  EXPECT_EQ(w.state(), "1");
  EXPECT_EQ(w.encode(), "forbid=11;state=1");
  EXPECT_EQ(WordClass({"101"}, "0010").state(), "10");
}

TEST(Words, RandomFactorSetsMatchTheOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::string> forbidden;
    const int k = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < k; ++i) {
      std::string f(std::uniform_int_distribution<std::size_t>(1, 4)(rng), '0');
      for (auto& c : f) c = std::uniform_int_distribution<int>(0, 1)(rng) ? '1' : '0';
      forbidden.push_back(f);
    }
    const auto run = explore(forbidden);
    ASSERT_TRUE(run.spec);
    const auto expected = grow_oracle(forbidden, 12);
    EXPECT_EQ(count_terms(*run.spec, 12), expected);
    EXPECT_EQ(count_words_brute(forbidden, 12), expected);
    // One label per automaton state at most.
    std::set<std::string> prefixes{""};
    for (const auto& f : forbidden) {
      for (std::size_t len = 1; len < f.size(); ++len) prefixes.insert(f.substr(0, len));
    }
    EXPECT_LE(run.classes, prefixes.size() + 1);
  }
}

TEST(Words, ParseFactors) {
  EXPECT_EQ(parse_factors("11,101"), (std::vector<std::string>{"11", "101"}));
  EXPECT_TRUE(parse_factors("").empty());
  EXPECT_THROW(parse_factors("11,,0"), InvalidFactor);
  EXPECT_THROW(parse_factors("12"), InvalidFactor);
  EXPECT_THROW(WordClass({""}), InvalidFactor);
}

}  // namespace
}  // namespace combex::words
