#include "ccgcomment/chart_parser.hpp"

#include <map>
#include <utility>

#include "ccgcomment/error.hpp"

namespace ccgc {

namespace {

struct Cell {
  // (category text, canonical semantics) -> derivation; ordered for
  // deterministic output.
  std::map<std::pair<std::string, std::string>, DerivationPtr> items;

  void insert(DerivationPtr d) {
    auto key = std::make_pair(to_string(d->cat), canonical_key(d->sem));
    items.emplace(std::move(key), std::move(d));
  }
};

}  // namespace

std::vector<DerivationPtr> parse_spanning(
    const Lexicon& lex, const std::vector<std::string>& tokens) {
  const std::size_t n = tokens.size();
  if (n == 0) return {};
  // chart[i][len - 1] covers tokens [i, i + len).
  std::vector<std::vector<Cell>> chart(n, std::vector<Cell>(n));
  for (std::size_t i = 0; i < n; ++i) {
    auto entries = lex.lookup(tokens[i]);
    if (entries.empty()) throw UnknownWord(tokens[i], i);
    for (const LexEntry& e : entries) chart[i][0].insert(make_leaf(i, e));
  }
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      Cell& target = chart[i][len - 1];
      for (std::size_t split = 1; split < len; ++split) {
        const Cell& left = chart[i][split - 1];
        const Cell& right = chart[i + split][len - split - 1];
        for (const auto& [lk, l] : left.items) {
          for (const auto& [rk, r] : right.items) {
            for (auto& c : combine(l->cat, l->sem, r->cat, r->sem)) {
              target.insert(std::make_shared<const Derivation>(
                  Derivation{i, i + len, std::move(c.cat), std::move(c.sem),
                             c.rule, {}, {l, r}}));
            }
          }
        }
      }
    }
  }
  std::vector<DerivationPtr> out;
  for (auto& [key, d] : chart[0][n - 1].items) out.push_back(d);
  return out;
}

std::vector<DerivationPtr> parse(const Lexicon& lex,
                                 const std::vector<std::string>& tokens) {
  std::vector<DerivationPtr> out;
  for (auto& d : parse_spanning(lex, tokens)) {
    if (lex.is_root(d->cat)) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace ccgc
