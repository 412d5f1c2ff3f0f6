#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ccgcomment/category.hpp"
#include "ccgcomment/lambda.hpp"
#include "ccgcomment/lexicon.hpp"

namespace ccgc {

enum class Rule { Lex, FwdApp, BwdApp, FwdComp, BwdComp };

const char* to_string(Rule r);

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

/// A derivation tree over tokens [begin, end).
struct Derivation {
  std::size_t begin;
  std::size_t end;
  Category cat;
  Term sem;  // beta-normal
  Rule rule;
  std::string word;                     // Lex only
  std::vector<DerivationPtr> children;  // 0 for Lex, 2 otherwise
};

DerivationPtr make_leaf(std::size_t position, const LexEntry& entry);

/// The result of one combinator applied to adjacent constituents.
struct Combination {
  Rule rule;
  Category cat;
  Term sem;
};

/// Every application or harmonic composition of `left` followed by `right`.
/// Combinations whose semantics fail to normalize are dropped.
std::vector<Combination> combine(const Category& left_cat,
                                 const Term& left_sem,
                                 const Category& right_cat,
                                 const Term& right_sem);

/// Re-checks every node of `d` against the combinator definitions and the
/// lexicon. On failure returns false and, if `why` is given, explains.
bool validate_derivation(const Derivation& d, const Lexicon& lex,
                         std::string* why = nullptr);

/// The words at the leaves, left to right.
std::vector<std::string> leaves(const Derivation& d);

/// Indented tree, one node per line, two spaces per level:
///   FwdApp S[ger] : condition() & inequality(x, y)
///     Lex "checking" S[ger]/PPfor : \p. condition() & p
std::string format_tree(const Derivation& d);

}  // namespace ccgc
