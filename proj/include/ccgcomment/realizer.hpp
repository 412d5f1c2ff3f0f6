#pragma once

// Surface realization as A* search over CCG constituents.
//
// The search grows constituents bottom-up from lexicon entries. An entry is
// admitted only if its predicate and constant symbols fit inside the symbols
// of the goal that are still uncovered, so every constituent describes part
// of the goal and nothing else. Constituents are expanded in order of
// cost + h, where h is a lower bound on the weight of the words still needed
// to cover the missing symbols. The first constituent whose category is a
// root and whose semantics is equivalent to the goal is a cheapest sentence;
// among equally cheap sentences the lexicographically smallest token
// sequence wins.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ccgcomment/derivation.hpp"
#include "ccgcomment/goal.hpp"
#include "ccgcomment/lexicon.hpp"

namespace ccgc {

struct SearchLimits {
  std::size_t max_words = 20;
  std::size_t max_expansions = 200000;
};

struct Realization {
  std::vector<std::string> tokens;
  DerivationPtr derivation;
  Term sem;
  unsigned cost = 0;
};

/// Snapshot of one expanded constituent, reported to a SearchObserver.
struct ExpandedState {
  unsigned cost;
  unsigned heuristic;
  std::vector<std::string> tokens;
  /// Goal symbols ("P:name" for predicates, "C:name" for constants) still
  /// missing, with multiplicity.
  std::map<std::string, unsigned> uncovered;
};

using SearchObserver = std::function<void(const ExpandedState&)>;

/// Symbol multiset of a term: predicate names as "P:name", constants as
/// "C:name".
std::map<std::string, unsigned> symbol_units(const Term& t);

/// Cheapest realization. Throws NoRealization when the search space is
/// exhausted, LimitExceeded when `limits.max_expansions` is hit first.
Realization realize(const Lexicon& lex, const Goal& goal,
                    const SearchLimits& limits = {},
                    const SearchObserver& observer = {});

/// Up to `k` realizations with distinct token sequences, cheapest first (ties
/// in token order). `realize_all(..., 1, ...)` returns exactly `realize`.
std::vector<Realization> realize_all(const Lexicon& lex, const Goal& goal,
                                     std::size_t k,
                                     const SearchLimits& limits = {},
                                     const SearchObserver& observer = {});

}  // namespace ccgc
