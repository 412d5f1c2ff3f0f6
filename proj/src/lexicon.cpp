#include "ccgcomment/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ccgcomment/error.hpp"

namespace ccgc {

bool operator==(const LexEntry& a, const LexEntry& b) {
  return a.word == b.word && a.cat == b.cat && a.weight == b.weight &&
         equivalent(a.sem, b.sem);
}

std::size_t normalization_fuel(const Term& t) { return 10 * size(t); }

void Lexicon::add(LexEntry entry, std::size_t line) {
  if (entry.word.empty()) throw LexiconError("empty word", line);
  if (std::any_of(entry.word.begin(), entry.word.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0;
      })) {
    throw LexiconError("word '" + entry.word + "' contains whitespace", line);
  }
  if (!is_closed(entry.sem)) {
    throw LexiconError("semantics of '" + entry.word + "' is not closed", line);
  }
  if (!is_linear(entry.sem)) {
    throw LexiconError("semantics of '" + entry.word +
                           "' must use each bound variable exactly once",
                       line);
  }
  try {
    entry.sem = beta_normalize(entry.sem, normalization_fuel(entry.sem));
  } catch (const FuelExhausted&) {
    throw LexiconError("semantics of '" + entry.word + "' does not normalize",
                       line);
  }
  auto& slots = by_word_[entry.word];
  for (std::size_t idx : slots) {
    if (entries_[idx] == entry) return;
  }
  slots.push_back(entries_.size());
  entries_.push_back(std::move(entry));
}

std::vector<std::reference_wrapper<const LexEntry>> Lexicon::lookup(
    std::string_view word) const {
  std::vector<std::reference_wrapper<const LexEntry>> out;
  auto it = by_word_.find(word);
  if (it == by_word_.end()) return out;
  for (std::size_t idx : it->second) out.emplace_back(entries_[idx]);
  return out;
}

bool Lexicon::has_word(std::string_view word) const {
  return by_word_.find(word) != by_word_.end();
}

bool Lexicon::is_root(const Category& c) const {
  return std::any_of(roots_.begin(), roots_.end(),
                     [&](const Category& r) { return unifies(r, c); });
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::size_t offset_in(std::string_view whole, std::string_view part) {
  return static_cast<std::size_t>(part.data() - whole.data());
}

bool valid_word(std::string_view w) {
  if (w.empty()) return false;
  std::size_t end = w.size();
  if (w.back() == ']') {
    const auto open = w.find('[');
    if (open == std::string_view::npos || open == 0 || open + 2 > end - 1) {
      return false;
    }
    end = open;
  }
  for (std::size_t i = 0; i < end; ++i) {
    const char c = w[i];
    const bool ok = std::islower(static_cast<unsigned char>(c)) != 0 ||
                    std::isdigit(static_cast<unsigned char>(c)) != 0 ||
                    c == '\'' || c == '-' || c == '_';
    if (!ok) return false;
  }
  return true;
}

/// Rebases a SyntaxError raised on a line fragment onto the file.
[[noreturn]] void rethrow_at(const SyntaxError& e, std::size_t line,
                             std::size_t base) {
  throw SyntaxError(e.message(), line, base + e.column());
}

}  // namespace

Lexicon parse_lexicon(std::string_view text) {
  Lexicon lex;
  bool have_roots = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      if (nl == text.size()) break;
      continue;
    }

    if (line.rfind("roots:", 0) == 0) {
      if (have_roots) throw DuplicateRootDecl(line_no);
      have_roots = true;
      std::vector<Category> roots;
      std::string_view rest = line.substr(6);
      while (true) {
        auto comma = rest.find(',');
        std::string_view piece =
            trim(rest.substr(0, comma == std::string_view::npos ? rest.size()
                                                                : comma));
        if (piece.empty()) {
          throw SyntaxError("empty root category", line_no,
                            offset_in(raw, rest));
        }
        try {
          roots.push_back(parse_category(piece));
        } catch (const SyntaxError& e) {
          rethrow_at(e, line_no, offset_in(raw, piece));
        }
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      lex.set_roots(std::move(roots));
      if (nl == text.size()) break;
      continue;
    }

    const auto def = line.find(":=");
    if (def == std::string_view::npos) {
      throw SyntaxError("expected 'word := Category : term'", line_no,
                        offset_in(raw, line));
    }
    std::string_view word = trim(line.substr(0, def));
    if (!valid_word(word)) {
      throw SyntaxError("invalid word '" + std::string(word) + "'", line_no,
                        offset_in(raw, line));
    }
    std::string_view rest = line.substr(def + 2);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw SyntaxError("expected ':' before the semantics", line_no,
                        offset_in(raw, rest));
    }
    std::string_view cat_text = trim(rest.substr(0, colon));
    std::string_view sem_text = rest.substr(colon + 1);
    unsigned weight = 1;
    if (auto at = sem_text.find('@'); at != std::string_view::npos) {
      std::string_view suffix = trim(sem_text.substr(at));
      sem_text = sem_text.substr(0, at);
      if (suffix.rfind("@weight", 0) != 0) {
        throw SyntaxError("unknown annotation", line_no,
                          offset_in(raw, suffix));
      }
      std::string_view number = trim(suffix.substr(7));
      if (number.empty() ||
          !std::all_of(number.begin(), number.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c)) != 0;
          }) ||
          number.size() > 9) {
        throw SyntaxError("expected a non-negative integer weight", line_no,
                          offset_in(raw, number));
      }
      weight = static_cast<unsigned>(std::stoul(std::string(number)));
    }
    sem_text = trim(sem_text);
    if (cat_text.empty()) {
      throw SyntaxError("missing category", line_no, offset_in(raw, rest));
    }
    if (sem_text.empty()) {
      throw SyntaxError("missing semantics", line_no, offset_in(raw, rest));
    }

    Category cat = Category::atom("?");
    try {
      cat = parse_category(cat_text);
    } catch (const SyntaxError& e) {
      rethrow_at(e, line_no, offset_in(raw, cat_text));
    }
    Term sem = constant("?");
    try {
      sem = parse_term(sem_text);
    } catch (const SyntaxError& e) {
      rethrow_at(e, line_no, offset_in(raw, sem_text));
    }
    lex.add(LexEntry{std::string(word), cat, sem, weight}, line_no);
    if (nl == text.size()) break;
  }
  if (lex.size() == 0) throw EmptyLexicon();
  if (!have_roots) throw SyntaxError("missing 'roots:' declaration", 0, 0);
  return lex;
}

Lexicon load_lexicon(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lexicon(buf.str());
}

Lexicon load_lexicon_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lexicon '" + path.string() + "'");
  return load_lexicon(in);
}

Lexicon extend_with_identifiers(const Lexicon& lex,
                                const std::vector<std::string>& names) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Lexicon out = lex;
  const Category np = Category::atom("NP");
  for (const auto& name : sorted) {
    out.add(LexEntry{name, np, constant(name), 1});
  }
  return out;
}

}  // namespace ccgc
