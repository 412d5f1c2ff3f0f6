#pragma once

// Lexicon: words paired with a category and a closed, linear, beta-normal
// semantics. It is the planning domain searched by the realizer.
//
// File format (UTF-8, one declaration per line):
//
//   # comment
//   roots: S[imp], S[ger]
//   sort := VP/NP : \x. sort'(x)
//   the  := NP/N  : \x. x            @weight 1
//
// Exactly one `roots:` line is required. Words are lowercase and may carry a
// trailing `[tag]` that surface post-processing removes.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ccgcomment/category.hpp"
#include "ccgcomment/lambda.hpp"

namespace ccgc {

struct LexEntry {
  std::string word;
  Category cat;
  Term sem;
  unsigned weight = 1;
};

bool operator==(const LexEntry& a, const LexEntry& b);

/// Fuel granted for normalizing `t`; linear terms always finish well within.
std::size_t normalization_fuel(const Term& t);

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<Category> roots) : roots_(std::move(roots)) {}

  /// Validates and normalizes the semantics; throws LexiconError (tagged with
  /// `line` when nonzero) for open, non-linear or non-normalizing terms.
  /// Adding an entry equal to an existing one is a no-op.
  void add(LexEntry entry, std::size_t line = 0);

  const std::vector<LexEntry>& entries() const { return entries_; }
  const std::vector<Category>& roots() const { return roots_; }
  void set_roots(std::vector<Category> roots) { roots_ = std::move(roots); }

  /// All homonym entries for `word`, in insertion order.
  std::vector<std::reference_wrapper<const LexEntry>> lookup(
      std::string_view word) const;
  bool has_word(std::string_view word) const;

  bool is_root(const Category& c) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<Category> roots_;
  std::vector<LexEntry> entries_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_word_;
};

Lexicon load_lexicon(std::istream& in);
Lexicon parse_lexicon(std::string_view text);
Lexicon load_lexicon_file(const std::filesystem::path& path);

/// Copy of `lex` with an entry `v := NP : v` for every name not already
/// present with exactly that entry. Order of `names` does not matter.
Lexicon extend_with_identifiers(const Lexicon& lex,
                                const std::vector<std::string>& names);

}  // namespace ccgc
