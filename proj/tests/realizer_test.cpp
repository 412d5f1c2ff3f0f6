#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "ccgcomment/chart_parser.hpp"
#include "ccgcomment/error.hpp"
#include "ccgcomment/realizer.hpp"
#include "ccgcomment/surface.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ccgc;

namespace {

Goal G(std::initializer_list<const char*> preds) {
  std::vector<Term> ts;
  for (const char* p : preds) ts.push_back(parse_term(p));
  return Goal(std::move(ts));
}

std::string words(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) out += (out.empty() ? "" : " ") + strip_metadata(t);
  return out;
}

void expect_sound(const Lexicon& lex, const Goal& goal, const Realization& r) {
  std::string why;
  EXPECT_TRUE(validate_derivation(*r.derivation, lex, &why)) << why;
  EXPECT_EQ(leaves(*r.derivation), r.tokens);
  EXPECT_TRUE(lex.is_root(r.derivation->cat));
  EXPECT_TRUE(equivalent(r.sem, goal.as_term()));
  EXPECT_EQ(symbol_units(r.sem), symbol_units(goal.as_term()));
  unsigned cost = 0;
  for (const auto& t : r.tokens) {
    unsigned best = ~0u;
    for (const auto& e : lex.lookup(t)) best = std::min(best, e.get().weight);
    cost += best;
  }
  EXPECT_LE(cost, r.cost);
}

}  // namespace

TEST(Realizer, SortTheArray) {
  const Lexicon lex = parse_lexicon(fixtures::kSortNounLexicon);
  const Goal goal = G({"sort'(array')"});
  const Realization r = realize(lex, goal);
  EXPECT_EQ(words(r.tokens), "sort the array");
  EXPECT_EQ(r.cost, 3u);
  expect_sound(lex, goal, r);
  const auto brute = oracle::brute_force_realize(lex, goal, 4, 100);
  ASSERT_TRUE(brute);
  EXPECT_EQ(brute->cost, r.cost);
  EXPECT_EQ(realize_all(lex, goal, 5).size(), 1u);
}

TEST(Realizer, TableCommentsFromBundledGrammar) {
  const Lexicon lex = extend_with_identifiers(fixtures::english(), {"x", "y", "a"});
  const std::vector<std::pair<Goal, std::string>> rows{
      {G({"condition()", "inequality(x, y)"}), "Checking for inequality between x and y"},
      {G({"iterate()", "element()", "list(a)"}), "Iterate over elements of the list a"},
      {G({"iterate()", "keys()", "dictionary(a)"}), "Iterate over the keys of the dictionary a"},
  };
  for (const auto& [goal, text] : rows) {
    const Realization r = realize(lex, goal);
    EXPECT_EQ(finalize(r.tokens).text, text);
    expect_sound(lex, goal, r);
  }
}

TEST(Realizer, PredicateOrderDoesNotMatter) {
  const Lexicon lex = extend_with_identifiers(fixtures::english(), {"a"});
  const Realization a = realize(lex, G({"iterate()", "element()", "list(a)"}));
  const Realization b = realize(lex, G({"list(a)", "iterate()", "element()"}));
  EXPECT_EQ(a.tokens, b.tokens);
}

TEST(Realizer, SynonymsGiveVariants) {
  const Lexicon lex = extend_with_identifiers(fixtures::english(), {"a"});
  const Goal goal = G({"iterate()", "element()", "list(a)"});
  const auto all = realize_all(lex, goal, 2);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(words(all[0].tokens), "iterate over elements of the list a");
  EXPECT_EQ(words(all[1].tokens), "loop over elements of the list a");
  EXPECT_LE(all[0].cost, all[1].cost);
  for (const auto& r : all) expect_sound(lex, goal, r);
  const auto one = realize_all(lex, goal, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].tokens, realize(lex, goal).tokens);
  EXPECT_THROW(realize_all(lex, goal, 0), std::invalid_argument);
}

TEST(Realizer, Errors) {
  const Lexicon lex = extend_with_identifiers(fixtures::english(), {"x", "y"});
  EXPECT_THROW(realize(lex, G({"frobnicate(x)"})), NoRealization);
  EXPECT_THROW(realize(lex, G({"condition()", "inequality(x, y)"}), {20, 1}), LimitExceeded);
  EXPECT_THROW(realize(lex, G({"condition()"}), {0, 10}), std::invalid_argument);
  EXPECT_THROW(realize(lex, G({"condition()"}), {10, 0}), std::invalid_argument);
  // Three words cannot express the inequality goal.
  EXPECT_THROW(realize(lex, G({"condition()", "inequality(x, y)"}), {3, 200000}), NoRealization);
  EXPECT_THROW(Goal({}), std::invalid_argument);
  EXPECT_THROW(Goal({parse_term("\\x. p(x)")}), std::invalid_argument);
}

TEST(Realizer, MatchesBruteForceOnRandomInstances) {
  std::mt19937_64 rng(2024);
  int realizable = 0;
  for (int i = 0; i < 50; ++i) {
    const auto inst = oracle::random_instance(rng, 15, 4);
    const auto brute = oracle::brute_force_realize(inst.lexicon, inst.goal, 8, 40);
    try {
      const Realization r = realize(inst.lexicon, inst.goal, {8, 2000000});
      ASSERT_TRUE(brute) << "realizer found a sentence the oracle did not: " << words(r.tokens);
      EXPECT_EQ(r.cost, brute->cost) << "instance " << i;
      EXPECT_EQ(r.tokens, brute->tokens) << "instance " << i;
      expect_sound(inst.lexicon, inst.goal, r);
      ++realizable;
    } catch (const NoRealization&) {
      EXPECT_FALSE(brute) << "instance " << i << " has " << words(brute->tokens);
    }
  }
  EXPECT_GE(realizable, 25);
}

TEST(Realizer, HeuristicNeverOverestimates) {
  std::mt19937_64 rng(99);
  std::size_t observed = 0;
  auto check = [&](const Lexicon& lex, const Goal& goal) {
    const SearchObserver obs = [&](const ExpandedState& s) {
      ++observed;
      const auto exact = oracle::exact_cover_cost(lex, s.uncovered);
      if (exact) ASSERT_LE(s.heuristic, *exact);
    };
    try {
      realize(lex, goal, {8, 200000}, obs);
    } catch (const NoRealization&) {
    }
  };
  for (int i = 0; i < 200; ++i) {
    const auto inst = oracle::random_instance(rng, 15, 4);
    check(inst.lexicon, inst.goal);
  }
  const Lexicon eng = extend_with_identifiers(fixtures::english(), {"x", "y", "a"});
  check(eng, G({"condition()", "inequality(x, y)"}));
  check(eng, G({"iterate()", "keys()", "dictionary(a)"}));
  EXPECT_GT(observed, 1000u);
}

TEST(Realizer, Deterministic) {
  const Lexicon lex = extend_with_identifiers(fixtures::english(), {"x", "y"});
  const Goal goal = G({"condition()", "inequality(x, y)"});
  const auto first = realize(lex, goal).tokens;
  for (int i = 0; i < 5; ++i) EXPECT_EQ(realize(lex, goal).tokens, first);
}

TEST(SymbolUnits, CountsPredicatesAndConstants) {
  const auto u = symbol_units(parse_term("p(a, q(a)) & p()"));
  EXPECT_EQ(u, (std::map<std::string, unsigned>{{"P:p", 2}, {"P:q", 1}, {"C:a", 2}}));
}
