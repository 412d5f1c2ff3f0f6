#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ccgcomment/chart_parser.hpp"
#include "ccgcomment/derivation.hpp"
#include "ccgcomment/error.hpp"
#include "support/oracles.hpp"
#include "support/fixtures.hpp"

using namespace ccgc;

namespace {

std::set<oracle::Analysis> chart_analyses(const Lexicon& lex,
                                          const std::vector<std::string>& tokens) {
  std::set<oracle::Analysis> out;
  for (const auto& d : parse_spanning(lex, tokens)) {
    out.emplace(to_string(d->cat), oracle::multiset_key(d->sem));
  }
  return out;
}

}  // namespace

TEST(ChartParser, SortTheArray) {
  const Lexicon lex = parse_lexicon(fixtures::kSortLexicon);
  const auto ds = parse(lex, {"sort", "the", "array"});
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(to_string(ds[0]->cat), "VP");
  EXPECT_EQ(to_string(ds[0]->sem), "sort'(array')");
  EXPECT_EQ(ds[0]->begin, 0u);
  EXPECT_EQ(ds[0]->end, 3u);
  EXPECT_EQ(leaves(*ds[0]), (std::vector<std::string>{"sort", "the", "array"}));
  EXPECT_TRUE(validate_derivation(*ds[0], lex));
}

TEST(ChartParser, UnknownWordReportsPosition) {
  const Lexicon lex = parse_lexicon(fixtures::kSortLexicon);
  try {
    parse(lex, {"sort", "a", "array"});
    FAIL();
  } catch (const UnknownWord& e) {
    EXPECT_EQ(e.token(), "a");
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(ChartParser, RootFilter) {
  const Lexicon lex = parse_lexicon(fixtures::kSortLexicon);
  EXPECT_TRUE(parse(lex, {"the", "array"}).empty());
  EXPECT_EQ(parse_spanning(lex, {"the", "array"}).size(), 1u);
  EXPECT_TRUE(parse(lex, {}).empty());
}

TEST(ChartParser, CompositionBuildsFunctors) {
  const Lexicon lex = parse_lexicon(fixtures::kCompositionLexicon);
  bool composed = false;
  for (const auto& d : parse_spanning(lex, {"might", "see"})) {
    if (d->rule == Rule::FwdComp) {
      composed = true;
      EXPECT_EQ(to_string(d->cat), "(S\\NP)/NP");
      EXPECT_TRUE(equivalent(d->sem, parse_term("\\z. \\y. might(see(y, z))")));
    }
  }
  EXPECT_TRUE(composed);
}

TEST(ChartParser, BundledGrammarReadsTableComments) {
  const Lexicon lex = extend_with_identifiers(fixtures::english(), {"x", "y", "a"});
  const auto ds = parse(lex, {"checking", "for", "inequality", "between", "x", "and", "y"});
  ASSERT_FALSE(ds.empty());
  EXPECT_TRUE(equivalent(ds[0]->sem, parse_term("condition() & inequality(x, y)")));
  for (const auto& d : ds) EXPECT_TRUE(validate_derivation(*d, lex));
}

TEST(ChartParser, MatchesExhaustiveBracketing) {
  std::mt19937_64 rng(21);
  std::size_t sequences = 0;
  std::size_t nonempty = 0;
  for (const auto& lex : fixtures::oracle_lexicons()) {
    std::vector<std::string> vocab;
    for (const auto& e : lex.entries()) {
      if (std::find(vocab.begin(), vocab.end(), e.word) == vocab.end()) vocab.push_back(e.word);
    }
    // Every sequence up to length 3, then random ones up to length 6.
    std::vector<std::vector<std::string>> seqs{{}};
    for (int len = 1; len <= 3; ++len) {
      std::vector<std::vector<std::string>> next;
      for (const auto& s : seqs) {
        if (static_cast<int>(s.size()) != len - 1) continue;
        for (const auto& w : vocab) {
          auto t = s;
          t.push_back(w);
          next.push_back(t);
        }
      }
      seqs.insert(seqs.end(), next.begin(), next.end());
    }
    for (int i = 0; i < 800; ++i) {
      std::vector<std::string> s;
      const int len = std::uniform_int_distribution<int>(4, 6)(rng);
      for (int k = 0; k < len; ++k) s.push_back(vocab[rng() % vocab.size()]);
      seqs.push_back(s);
    }
    for (const auto& s : seqs) {
      if (s.empty()) continue;
      ++sequences;
      const auto expected = oracle::exhaustive_parses(lex, s);
      if (!expected.empty()) ++nonempty;
      ASSERT_EQ(chart_analyses(lex, s), expected);
    }
  }
  EXPECT_GT(sequences, 5000u);
  EXPECT_GT(nonempty, 300u);
}

TEST(Validator, AcceptsEveryChartDerivation) {
  const Lexicon lex = parse_lexicon(fixtures::kCompositionLexicon);
  for (const auto& tokens : std::vector<std::vector<std::string>>{
           {"john", "might", "see", "mary"}, {"john", "sees", "mary"}, {"might", "see"}}) {
    for (const auto& d : parse_spanning(lex, tokens)) {
      std::string why;
      EXPECT_TRUE(validate_derivation(*d, lex, &why)) << why;
    }
  }
}

TEST(Validator, RejectsTamperedDerivations) {
  const Lexicon lex = parse_lexicon(fixtures::kSortLexicon);
  const auto d = parse(lex, {"sort", "the", "array"}).at(0);

  Derivation wrong_sem = *d;
  wrong_sem.sem = parse_term("sort'(list')");
  std::string why;
  EXPECT_FALSE(validate_derivation(wrong_sem, lex, &why));
  EXPECT_FALSE(why.empty());

  Derivation wrong_cat = *d;
  wrong_cat.cat = parse_category("NP");
  EXPECT_FALSE(validate_derivation(wrong_cat, lex));

  Derivation wrong_rule = *d;
  wrong_rule.rule = Rule::BwdApp;
  EXPECT_FALSE(validate_derivation(wrong_rule, lex));

  auto leaf = std::make_shared<Derivation>(*d->children[0]);
  leaf->word = "array";
  Derivation wrong_word = *d;
  wrong_word.children[0] = leaf;
  EXPECT_FALSE(validate_derivation(wrong_word, lex));

  Derivation wrong_span = *d;
  wrong_span.end = 4;
  EXPECT_FALSE(validate_derivation(wrong_span, lex));
}

TEST(Combine, RuleInventory) {
  const auto fwd = combine(parse_category("S/NP"), parse_term("\\x. p(x)"),
                           parse_category("NP"), parse_term("a"));
  ASSERT_EQ(fwd.size(), 1u);
  EXPECT_EQ(fwd[0].rule, Rule::FwdApp);
  EXPECT_EQ(to_string(fwd[0].sem), "p(a)");

  const auto bwd = combine(parse_category("NP"), parse_term("a"),
                           parse_category("S\\NP"), parse_term("\\x. q(x)"));
  ASSERT_EQ(bwd.size(), 1u);
  EXPECT_EQ(bwd[0].rule, Rule::BwdApp);

  const auto bcomp = combine(parse_category("NP\\NP"), parse_term("\\x. f(x)"),
                             parse_category("S\\NP"), parse_term("\\y. g(y)"));
  bool found = false;
  for (const auto& c : bcomp) {
    if (c.rule == Rule::BwdComp) {
      found = true;
      EXPECT_EQ(to_string(c.cat), "S\\NP");
      EXPECT_TRUE(equivalent(c.sem, parse_term("\\z. g(f(z))")));
    }
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(combine(parse_category("NP"), parse_term("a"), parse_category("NP"),
                      parse_term("b"))
                  .empty());
  EXPECT_STREQ(to_string(Rule::FwdComp), "FwdComp");
}

TEST(Derivation, FormatsTree) {
  const Lexicon lex = parse_lexicon(fixtures::kSortLexicon);
  const auto d = parse(lex, {"sort", "the", "array"}).at(0);
  EXPECT_EQ(format_tree(*d),
            "FwdApp VP : sort'(array')\n"
            "  Lex \"sort\" VP/NP : \\x. sort'(x)\n"
            "  FwdApp NP : array'\n"
            "    Lex \"the\" NP/NP : \\x. x\n"
            "    Lex \"array\" NP : array'\n");
}
