#pragma once

// Small lexicons shared by several test suites.

#include <random>
#include <vector>

#include "ccgcomment/lexicon.hpp"
#include "support/oracles.hpp"

namespace fixtures {

/// "sort the array" with a determiner that maps NP to NP.
inline constexpr const char* kSortLexicon = R"(# sort the array
roots: VP
sort  := VP/NP : \x. sort'(x)
the   := NP/NP : \x. x
array := NP    : array'
)";

/// The same sentence with a determiner taking a bare noun.
inline constexpr const char* kSortNounLexicon = R"(roots: VP
sort  := VP/NP : \x. sort'(x)
the   := NP/N  : \x. x
array := N     : array'
)";

/// Transitive verbs, modals and adverbs, so that both compositions fire.
inline constexpr const char* kCompositionLexicon = R"(roots: S
john    := NP : john
mary    := NP : mary
sees    := (S\NP)/NP : \x. \y. see(y, x)
see     := (S\NP)/NP : \x. \y. see(y, x)
might   := (S\NP)/(S\NP) : \v. \y. might(v y)
quickly := (S\NP)\(S\NP) : \v. \y. quick(v y)
often   := (S\NP)\(S\NP) : \v. \y. often(v y)
self    := NP\NP : \x. self(x)
)";

inline const ccgc::Lexicon& english() {
  static const ccgc::Lexicon lex = ccgc::load_lexicon_file(CCGCOMMENT_DEFAULT_LEXICON);
  return lex;
}

/// Hand-written lexicons plus a few random ones.
inline std::vector<ccgc::Lexicon> oracle_lexicons() {
  std::vector<ccgc::Lexicon> out{ccgc::parse_lexicon(kSortLexicon),
                                 ccgc::parse_lexicon(kSortNounLexicon),
                                 ccgc::parse_lexicon(kCompositionLexicon)};
  std::mt19937_64 rng(17);
  for (int i = 0; i < 4; ++i) out.push_back(oracle::random_instance(rng, 10, 3).lexicon);
  return out;
}

}  // namespace fixtures
