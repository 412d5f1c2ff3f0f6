#pragma once

// CKY chart parser over a Lexicon. Cells keep one derivation per
// (category, semantics) pair, semantics compared with `equivalent`.

#include <string>
#include <vector>

#include "ccgcomment/derivation.hpp"
#include "ccgcomment/lexicon.hpp"

namespace ccgc {

/// Every distinct derivation spanning all of `tokens`, whatever its category.
/// Throws UnknownWord for a token with no entry.
std::vector<DerivationPtr> parse_spanning(const Lexicon& lex,
                                          const std::vector<std::string>& tokens);

/// Spanning derivations whose category unifies with a root of `lex`. An empty
/// result means no parse.
std::vector<DerivationPtr> parse(const Lexicon& lex,
                                 const std::vector<std::string>& tokens);

}  // namespace ccgc
