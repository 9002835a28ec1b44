#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "combex/engine/searcher.hpp"
#include "combex/strategies/pack.hpp"
#include "combex/tilings/enumerate.hpp"
#include "combex/tilings/perm_oracle.hpp"
#include "combex/transfer/audit.hpp"
#include "combex/transfer/count.hpp"
#include "combex/transfer/gf.hpp"
#include "combex/transfer/solve.hpp"
#include "json.hpp"
#include "support/gf_iso.hpp"

namespace combex {
namespace {

using tilings::Tiling;

ClassLabel L(std::uint32_t id) { return ClassLabel{id}; }

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

struct Found {
  Specification spec;
  std::map<ClassLabel, Tiling> tilings;
};

Found explore(const std::vector<std::vector<int>>& basis) {
  Searcher<Tiling> s(tilings::basis_to_root_tiling(basis), tilings::default_tiling_pack());
  s.run(SearchLimits{});
  EXPECT_TRUE(s.specification());
  Found f{*s.specification(), {}};
  for (const auto& [label, rule] : f.spec.rules) f.tilings.emplace(label, s.classes().get(label));
  return f;
}

const Found& av132() {
  static const Found f = explore({{0, 2, 1}});
  return f;
}

const Found& av_big() {
  static const Found f = explore({{0, 1, 3, 2}, {0, 2, 3, 1}, {1, 0, 3, 2}});
  return f;
}

Specification single(CountingKernel k) {
  Specification spec;
  spec.root = L(0);
  spec.rules[L(0)] = Rule{L(0), {}, "verify", std::move(k)};
  return spec;
}

// F = 1 + x F, written as a shifted union of the class with itself.
Specification sequence_spec() {
  Specification spec;
  spec.root = L(0);
  spec.rules[L(0)] = Rule{L(0), {L(0)}, "shift", ShiftedDisjointUnion{1, 1, ints({1})}};
  return spec;
}

Specification two_cycle() {
  Specification spec;
  spec.root = L(0);
  spec.rules[L(0)] = Rule{L(0), {L(1)}, "a", DisjointUnion{1}};
  spec.rules[L(1)] = Rule{L(1), {L(0)}, "b", DisjointUnion{1}};
  return spec;
}

std::vector<Integer> root_series(const Specification& spec, std::size_t n) {
  return solve_series(emit_gf_system(spec), n).at(spec.root);
}

TEST(CountTerms, Catalan) {
  EXPECT_EQ(count_terms(av132().spec, 8), ints({1, 1, 2, 5, 14, 42, 132, 429, 1430}));
}

TEST(CountTerms, ThreePatternClass) {
  const auto terms = count_terms(av_big().spec, 8);
  EXPECT_EQ(std::vector<Integer>(terms.begin(), terms.begin() + 5), ints({1, 1, 2, 6, 21}));
  EXPECT_EQ(terms, tilings::count_avoiders({{0, 1, 3, 2}, {0, 2, 3, 1}, {1, 0, 3, 2}}, 8));
}

TEST(CountTerms, VerifiedEmptyWord) {
  EXPECT_EQ(count_terms(single(Verified{"empty", 0, 1}), 2), ints({1, 0, 0}));
  EXPECT_EQ(count_terms(single(Verified{"point", 1, 2}), 3), ints({0, 1, 0, 0}));
  EXPECT_EQ(count_terms(single(Verified{"monotone", 1, std::nullopt}), 3), ints({0, 1, 1, 1}));
}

TEST(CountTerms, ShiftedSelfReferenceIsFine) { EXPECT_EQ(count_terms(sequence_spec(), 4), ints({1, 1, 1, 1, 1})); }

TEST(CountTerms, SameSizeCycleIsDetected) {
  try {
    count_terms(two_cycle(), 3);
    FAIL() << "expected CycleDetected";
  } catch (const CycleDetected& e) {
    EXPECT_EQ(e.n, 0u);
  }
}

TEST(CountTerms, QuadraticMultiplications) {
  const auto at100 = count_all_terms(av132().spec, 100).multiplications;
  const auto at200 = count_all_terms(av132().spec, 200).multiplications;
  std::size_t factors = 0;
  for (const auto& [label, rule] : av132().spec.rules) {
    if (const auto* p = std::get_if<Product>(&rule.kernel)) factors += p->arity - 1;
  }
  ASSERT_GT(factors, 0u);
  // Each extra factor costs one convolution of length at most n + 1 for the
  // exact prefix and one for the top term.
  EXPECT_LE(at200, factors * 2 * 201 * 201);
  // Doubling N roughly quadruples the work.
  EXPECT_LE(at200, 5 * at100);
  EXPECT_GE(at200, 3 * at100);
  // C_200 has 117 digits.
  EXPECT_EQ(count_terms(av132().spec, 200).back().str().size(), 117u);
}

TEST(CountTerms, PerturbingAVerifiedRuleChangesTheRoot) {
  for (const Found* f : {&av132(), &av_big()}) {
    const auto base = count_terms(f->spec, 8);
    for (const auto& [label, rule] : f->spec.rules) {
      const auto* v = std::get_if<Verified>(&rule.kernel);
      if (!v) continue;
      Specification changed = f->spec;
      auto& w = std::get<Verified>(changed.rules.at(label).kernel);
      // Drop the first nonzero term.
      ++w.first;
      if (w.last && w.first >= *w.last) w.last = w.first + 1;
      EXPECT_NE(count_terms(changed, 8), base) << label.id;
    }
  }
}

TEST(Gf, Av132TextAndSeries) {
  const GfSystem system = emit_gf_system(av132().spec);
  EXPECT_EQ(system.equations.size(), av132().spec.rules.size());
  const std::string text = to_text(system);
  EXPECT_NE(text.find("F" + std::to_string(system.root.id) + "(x) = "), std::string::npos);
  EXPECT_EQ(root_series(av132().spec, 12), count_terms(av132().spec, 12));
}

TEST(Gf, EverySymbolHasAnEquation) {
  for (const Found* f : {&av132(), &av_big()}) {
    const GfSystem system = emit_gf_system(f->spec);
    std::set<ClassLabel> lhs;
    for (const auto& eq : system.equations) lhs.insert(eq.lhs);
    std::function<void(const Expr&)> walk = [&](const Expr& e) {
      if (e.kind == Expr::Kind::Symbol) EXPECT_TRUE(lhs.count(e.symbol)) << e.symbol.id;
      for (const auto& a : e.args) walk(a);
    };
    for (const auto& eq : system.equations) walk(eq.rhs);
  }
}

TEST(Gf, KernelShapes) {
  EXPECT_EQ(to_text(emit_gf_system(single(Verified{"empty", 0, 1}))), "F0(x) = 1\n");
  EXPECT_EQ(to_text(emit_gf_system(single(Verified{"point", 1, 2}))), "F0(x) = x\n");
  EXPECT_EQ(to_text(emit_gf_system(single(Verified{"monotone", 0, std::nullopt}))), "F0(x) = 1/(1-x)\n");
  EXPECT_EQ(to_text(emit_gf_system(single(Verified{"monotone", 1, std::nullopt}))), "F0(x) = x/(1-x)\n");
  EXPECT_EQ(to_text(emit_gf_system(sequence_spec())), "F0(x) = 1 + x*F0(x)\n");
  Specification p;
  p.root = L(0);
  p.rules[L(0)] = Rule{L(0), {L(1), L(2)}, "factor", Product{2, {}, 0}};
  p.rules[L(1)] = Rule{L(1), {}, "v", Verified{"point", 1, 2}};
  p.rules[L(2)] = Rule{L(2), {}, "v", Verified{"monotone", 0, std::nullopt}};
  EXPECT_EQ(to_text(emit_gf_system(p)), "F0(x) = F1(x)*F2(x)\nF1(x) = x\nF2(x) = 1/(1-x)\n");
}

TEST(Gf, JsonTree) {
  const auto j = nlohmann::json::parse(to_json(emit_gf_system(sequence_spec())));
  EXPECT_EQ(j["root"], 0);
  ASSERT_EQ(j["equations"].size(), 1u);
  const auto& rhs = j["equations"][0]["rhs"];
  EXPECT_EQ(rhs["op"], "sum");
  EXPECT_EQ(rhs["args"][0]["op"], "poly");
  EXPECT_EQ(rhs["args"][1]["op"], "monomial");
  EXPECT_EQ(rhs["args"][1]["shift"], 1);
  EXPECT_EQ(rhs["args"][1]["args"][0]["op"], "symbol");
}

TEST(Solve, Constant) {
  GfSystem s{L(0), {{L(0), Expr::poly(ints({1}))}}};
  EXPECT_EQ(solve_series(s, 5).at(L(0)), ints({1, 0, 0, 0, 0, 0}));
}

TEST(Solve, Geometric) {
  GfSystem s{L(0), {{L(0), Expr::sum({Expr::monomial(1, Expr::sym(L(0))), Expr::poly(ints({1}))})}}};
  EXPECT_EQ(solve_series(s, 6).at(L(0)), ints({1, 1, 1, 1, 1, 1, 1}));
}

TEST(Solve, IllFoundedSystemDoesNotConverge) {
  GfSystem s{L(0), {{L(0), Expr::sum({Expr::sym(L(0)), Expr::poly(ints({1}))})}}};
  EXPECT_THROW(solve_series(s, 4), NonConvergent);
}

TEST(Solve, MatchesCountingToTwenty) {
  for (const Found* f : {&av132(), &av_big()}) {
    const auto table = count_all_terms(f->spec, 20).terms;
    const auto series = solve_series(emit_gf_system(f->spec), 20);
    for (const auto& [label, terms] : table) EXPECT_EQ(series.at(label), terms) << label.id;
  }
}

TEST(Solve, EvaluateProductTruncates) {
  const std::map<ClassLabel, Series> values{{L(0), ints({1, 1, 1})}};
  EXPECT_EQ(evaluate(Expr::product({Expr::sym(L(0)), Expr::sym(L(0))}), values, 2), ints({1, 2, 3}));
  EXPECT_EQ(evaluate(Expr::geometric(2), values, 4), ints({0, 0, 1, 1, 1}));
}

std::map<ClassLabel, std::vector<Integer>> oracle_counts(const Found& f, std::size_t n) {
  std::map<ClassLabel, std::vector<Integer>> out;
  for (const auto& [label, t] : f.tilings) out.emplace(label, tilings::count_gridded_perms(t, n));
  return out;
}

TEST(Audit, Av132Passes) {
  const auto audits = audit_productivity(av132().spec, oracle_counts(av132(), 6));
  EXPECT_EQ(audits.size(), av132().spec.rules.size());
  for (const auto& a : audits) EXPECT_TRUE(a.pass) << a.parent.id << " " << (a.reasons.empty() ? "" : a.reasons[0]);
  EXPECT_TRUE(all_pass(audits));
}

TEST(Audit, TwoCycleFailsConditionTwoB) {
  const std::map<ClassLabel, std::vector<Integer>> counts{{L(0), ints({1, 2, 4})}, {L(1), ints({1, 2, 4})}};
  const auto audits = audit_productivity(two_cycle(), counts);
  EXPECT_FALSE(all_pass(audits));
  for (const auto& a : audits) {
    ASSERT_EQ(a.reasons.size(), 1u);
    EXPECT_NE(a.reasons[0].find("condition 2(b)"), std::string::npos);
  }
}

TEST(Audit, ChildOutnumberingTheParentFailsConditionTwoA) {
  const std::map<ClassLabel, std::vector<Integer>> counts{{L(0), ints({1, 1, 1})}, {L(1), ints({0, 2, 0})}};
  const auto audits = audit_productivity(two_cycle(), counts);
  EXPECT_FALSE(audits.front().pass);
  EXPECT_NE(audits.front().reasons.front().find("condition 2(a)"), std::string::npos);
}

TEST(Audit, VerifiedOnlyPassesVacuously) {
  const auto audits = audit_productivity(single(Verified{"empty", 0, 1}), {{L(0), ints({1, 0, 0})}});
  EXPECT_TRUE(all_pass(audits));
}

TEST(Audit, MissingCountsThrow) {
  EXPECT_THROW(audit_productivity(two_cycle(), {{L(0), ints({1})}}), std::invalid_argument);
}

GfSystem relabel(const GfSystem& g, const std::map<ClassLabel, ClassLabel>& to) {
  std::function<Expr(const Expr&)> go = [&](const Expr& e) {
    Expr out = e;
    if (e.kind == Expr::Kind::Symbol) out.symbol = to.at(e.symbol);
    for (auto& a : out.args) a = go(a);
    std::reverse(out.args.begin(), out.args.end());
    return out;
  };
  GfSystem r{to.at(g.root), {}};
  for (auto it = g.equations.rbegin(); it != g.equations.rend(); ++it) r.equations.push_back({to.at(it->lhs), go(it->rhs)});
  return r;
}

TEST(GfIsomorphism, ReferenceSystemCountsTheClass) {
  const auto series = solve_series(oracle::three_pattern_reference_system(), 8);
  EXPECT_EQ(series.at(L(1)), tilings::count_avoiders({{0, 1, 3, 2}, {0, 2, 3, 1}, {1, 0, 3, 2}}, 8));
}

TEST(GfIsomorphism, RenamingAndReorderingAreInvisible) {
  const GfSystem ref = oracle::three_pattern_reference_system();
  std::map<ClassLabel, ClassLabel> to;
  std::uint32_t next = 40;
  for (const auto& eq : ref.equations) to[eq.lhs] = L(next--);
  const auto iso = oracle::gf_isomorphism(ref, relabel(ref, to));
  ASSERT_TRUE(iso);
  EXPECT_EQ(*iso, to);
}

TEST(GfIsomorphism, StructuralChangesAreSeen) {
  const GfSystem ref = oracle::three_pattern_reference_system();
  GfSystem swapped = ref;
  // E11 = E3 * T10 becomes T1 * T10.
  swapped.equations.back().rhs.args[0] = Expr::sym(L(1));
  EXPECT_FALSE(oracle::gf_isomorphism(ref, swapped));
  GfSystem shorter = ref;
  shorter.equations.pop_back();
  EXPECT_FALSE(oracle::gf_isomorphism(ref, shorter));
  GfSystem rooted = ref;
  rooted.root = L(7);
  EXPECT_FALSE(oracle::gf_isomorphism(ref, rooted));
}

}  // namespace
}  // namespace combex
