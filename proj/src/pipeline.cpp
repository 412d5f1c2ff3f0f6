#include "ccgcomment/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "ccgcomment/chart_parser.hpp"
#include "ccgcomment/error.hpp"
#include "ccgcomment/frontend.hpp"

namespace ccgc {
namespace {

using Json = nlohmann::ordered_json;

void collect_constants(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Const:
      out.insert(t.name());
      return;
    case TermKind::Pred:
      for (const auto& a : t.args()) collect_constants(a, out);
      return;
    case TermKind::Abs:
      collect_constants(t.body(), out);
      return;
    case TermKind::App:
      collect_constants(t.fn(), out);
      collect_constants(t.arg(), out);
      return;
    case TermKind::Conj:
      collect_constants(t.left(), out);
      collect_constants(t.right(), out);
      return;
    case TermKind::Var:
      return;
  }
}

struct Line {
  std::string_view content;  // without the line ending
  std::string_view ending;   // "\n", "\r\n" or empty on an unterminated last line
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back({text.substr(start), {}});
      break;
    }
    std::size_t end = nl;
    if (end > start && text[end - 1] == '\r') --end;
    lines.push_back({text.substr(start, end - start), text.substr(end, nl + 1 - end)});
    start = nl + 1;
  }
  return lines;
}

std::string rstrip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

std::string quote_source(const std::vector<Line>& lines, const SourceStmt& st) {
  if (st.loc.line >= 1 && st.loc.line <= lines.size()) {
    const std::string_view content = lines[st.loc.line - 1].content;
    if (st.loc.column <= content.size()) return rstrip(content.substr(st.loc.column));
  }
  if (st.kind == StmtKind::Unsupported) return {};
  const std::string printed = to_source(std::vector<SourceStmt>{st});
  return printed.substr(0, printed.find('\n'));
}

Lexicon surface_lexicon(const Lexicon& lex) {
  Lexicon out(lex.roots());
  for (const auto& e : lex.entries()) {
    LexEntry copy = e;
    copy.word = strip_metadata(e.word);
    out.add(std::move(copy));
  }
  return out;
}

bool matches_goal(const Lexicon& lex, const std::vector<std::string>& tokens,
                  const Term& goal) {
  try {
    for (const auto& d : parse(lex, tokens)) {
      if (equivalent(d->sem, goal)) return true;
    }
  } catch (const UnknownWord&) {
  }
  return false;
}

bool round_trips_surface(const Lexicon& surface, const CommentText& comment,
                         const Goal& goal) {
  std::vector<std::string> tokens;
  std::istringstream in(comment.text);
  for (std::string w; in >> w;) tokens.push_back(w);
  if (tokens.empty()) return false;
  const Term g = goal.as_term();
  const std::string original = tokens[0];
  tokens[0][0] = static_cast<char>(std::tolower(static_cast<unsigned char>(tokens[0][0])));
  if (matches_goal(surface, tokens, g)) return true;
  if (tokens[0] == original) return false;
  tokens[0] = original;
  return matches_goal(surface, tokens, g);
}

std::vector<Category> parse_roots(const std::string& spec) {
  std::vector<Category> roots;
  std::string item;
  std::istringstream in(spec);
  while (std::getline(in, item, ',')) {
    const std::string trimmed = rstrip(item);
    const auto first = trimmed.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    roots.push_back(parse_category(trimmed.substr(first)));
  }
  if (roots.empty()) throw SyntaxError("empty root category list", 0, 0);
  return roots;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::optional<Mode> mode_from_string(std::string_view s) {
  if (s == "annotate") return Mode::Annotate;
  if (s == "jsonl") return Mode::Jsonl;
  if (s == "emit-lf") return Mode::EmitLf;
  if (s == "parse-debug") return Mode::ParseDebug;
  return std::nullopt;
}

const char* to_string(SkipReason r) {
  switch (r) {
    case SkipReason::UnsupportedStmt: return "unsupported-stmt";
    case SkipReason::NoRealization: return "no-realization";
    case SkipReason::LimitExceeded: return "limit-exceeded";
  }
  return "?";
}

Lexicon file_lexicon(const Lexicon& base,
                     const std::vector<AnnotatedStmt>& annotated) {
  std::set<std::string> names;
  for (const auto& a : annotated) {
    if (!a.goal) continue;
    for (const auto& p : a.goal->predicates()) collect_constants(p, names);
  }
  return extend_with_identifiers(base, {names.begin(), names.end()});
}

bool round_trips(const Lexicon& lex, const CommentText& comment,
                 const Goal& goal) {
  return round_trips_surface(surface_lexicon(lex), comment, goal);
}

std::vector<StmtReport> comment_statements(const Lexicon& base,
                                           const std::vector<SourceStmt>& stmts,
                                           std::string_view text,
                                           const CommentOptions& options) {
  const auto annotated = extract(stmts);
  const Lexicon lex = file_lexicon(base, annotated);
  const Lexicon surface = options.verify ? surface_lexicon(lex) : Lexicon{};
  const auto lines = split_lines(text);

  std::vector<StmtReport> reports(annotated.size());
  for (std::size_t i = 0; i < annotated.size(); ++i) {
    const auto& a = annotated[i];
    auto& r = reports[i];
    r.loc = a.stmt.loc;
    r.kind = a.stmt.kind;
    r.source = quote_source(lines, a.stmt);
    if (a.goal) {
      r.goal = a.goal->printed();
    } else {
      r.skip = SkipReason::UnsupportedStmt;
    }
  }

  std::vector<std::exception_ptr> failures(annotated.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < annotated.size(); i = next++) {
      if (!annotated[i].goal) continue;
      const Goal& goal = *annotated[i].goal;
      auto& r = reports[i];
      try {
        const auto found = realize_all(lex, goal, options.variants, options.limits);
        for (const auto& rz : found) r.variants.push_back(finalize(rz.tokens));
        r.comment = r.variants.front();
        if (options.variants <= 1) r.variants.clear();
        if (options.verify && !round_trips_surface(surface, *r.comment, goal)) {
          throw VerificationFailure(r.loc, r.comment->text);
        }
      } catch (const NoRealization&) {
        r.skip = SkipReason::NoRealization;
      } catch (const LimitExceeded&) {
        r.skip = SkipReason::LimitExceeded;
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::size_t jobs = options.jobs;
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(annotated.size(), 1));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return reports;
}

std::string annotate(std::string_view text, const std::vector<StmtReport>& reports) {
  std::map<std::size_t, std::vector<const CommentText*>> above;
  for (const auto& r : reports) {
    if (r.comment) above[r.loc.line].push_back(&*r.comment);
  }
  const auto lines = split_lines(text);
  std::string default_ending = "\n";
  for (const auto& l : lines) {
    if (!l.ending.empty()) {
      default_ending = std::string(l.ending);
      break;
    }
  }
  std::string out;
  out.reserve(text.size() + reports.size() * 48);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (auto it = above.find(i + 1); it != above.end()) {
      const std::size_t indent = l.content.find_first_not_of(" \t\f");
      const std::string_view pad =
          l.content.substr(0, indent == std::string_view::npos ? 0 : indent);
      const std::string ending = l.ending.empty() ? default_ending : std::string(l.ending);
      for (const auto* c : it->second) {
        out += pad;
        out += "# ";
        out += c->text;
        out += ending;
      }
    }
    out += l.content;
    out += l.ending;
  }
  return out;
}

std::string to_jsonl(const std::vector<StmtReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    Json j;
    j["loc"] = Json::array({r.loc.line, r.loc.column});
    j["source"] = r.source;
    j["goal"] = r.skip == SkipReason::UnsupportedStmt ? Json(nullptr) : Json(r.goal);
    if (r.comment) {
      j["comment"] = r.comment->text;
    } else {
      j["skip"] = to_string(*r.skip);
    }
    if (!r.variants.empty()) {
      Json vs = Json::array();
      for (const auto& v : r.variants) vs.push_back(v.text);
      j["variants"] = std::move(vs);
    }
    out += j.dump(-1, ' ', false, Json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

std::string emit_lf(const std::vector<AnnotatedStmt>& annotated) {
  std::string out;
  for (const auto& a : annotated) {
    Json j;
    j["loc"] = Json::array({a.stmt.loc.line, a.stmt.loc.column});
    j["kind"] = to_string(a.stmt.kind);
    j["goal"] = a.goal ? Json(a.goal->printed()) : Json(nullptr);
    out += j.dump(-1, ' ', false, Json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

std::string parse_debug(const Lexicon& base, std::string_view text,
                        std::size_t& parsed) {
  parsed = 0;
  std::string out;
  for (const auto& line : split_lines(text)) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line.content)};
    for (std::string w; in >> w;) tokens.push_back(w);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    std::vector<std::string> unknown;
    for (const auto& t : tokens) {
      if (!base.has_word(t)) unknown.push_back(t);
    }
    const Lexicon lex = extend_with_identifiers(base, unknown);
    const auto ds = parse(lex, tokens);
    out += "sentence:";
    for (const auto& t : tokens) out += " " + t;
    out += "\n";
    if (ds.empty()) {
      out += "no parse\n\n";
      continue;
    }
    ++parsed;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      out += "parse " + std::to_string(i + 1) + ": " + to_string(ds[i]->cat) +
             " : " + to_string(ds[i]->sem) + "\n";
      out += format_tree(*ds[i]);
    }
    out += "\n";
  }
  return out;
}

CoverageSummary report_coverage(const std::vector<StmtReport>& reports) {
  CoverageSummary s;
  for (const auto& r : reports) {
    ++s.total;
    if (r.skip == SkipReason::UnsupportedStmt) {
      ++s.unsupported;
      continue;
    }
    ++s.supported;
    if (r.comment) {
      ++s.commented;
    } else if (r.skip == SkipReason::NoRealization) {
      ++s.no_realization;
    } else {
      ++s.limit_exceeded;
    }
  }
  return s;
}

std::string format_coverage(const CoverageSummary& s) {
  return "statements: " + std::to_string(s.total) +
         "\nsupported: " + std::to_string(s.supported) +
         "\ncommented: " + std::to_string(s.commented) +
         "\nskipped unsupported-stmt: " + std::to_string(s.unsupported) +
         "\nskipped no-realization: " + std::to_string(s.no_realization) +
         "\nskipped limit-exceeded: " + std::to_string(s.limit_exceeded) + "\n";
}

RunResult run(const RunConfig& cfg) {
  RunResult res;
  try {
    const bool json_input = ends_with(cfg.input_path, ".json");
    if (cfg.mode == Mode::Annotate && json_input) {
      throw Error("annotate mode needs Python source, not a JSON AST");
    }
    if (cfg.variants == 0) throw Error("--variants must be at least 1");
    if (cfg.limits.max_words == 0 || cfg.limits.max_expansions == 0) {
      throw Error("--max-words and --expansions must be positive");
    }
    if (cfg.variants > 1 && cfg.mode != Mode::Jsonl) {
      throw Error("--variants applies to jsonl mode only");
    }
    std::vector<Category> roots;
    if (!cfg.roots.empty()) roots = parse_roots(cfg.roots);

    Lexicon base;
    try {
      base = load_lexicon_file(cfg.lexicon_path);
    } catch (const SyntaxError& e) {
      throw Error(cfg.lexicon_path + ":" + std::to_string(e.line()) + ":" +
                  std::to_string(e.column()) + ": " + e.message());
    } catch (const Error& e) {
      throw Error(cfg.lexicon_path + ": " + e.what());
    }
    if (!roots.empty()) base.set_roots(std::move(roots));

    const std::string text = read_file(cfg.input_path);
    if (cfg.mode == Mode::ParseDebug) {
      std::size_t parsed = 0;
      res.output = parse_debug(base, text, parsed);
      res.exit_code = parsed > 0 ? 0 : 2;
      return res;
    }

    std::vector<SourceStmt> stmts;
    try {
      stmts = json_input ? ingest_ast(text) : parse_source(text);
    } catch (const SyntaxError& e) {
      throw Error(cfg.input_path + ":" + std::to_string(e.line()) + ":" +
                  std::to_string(e.column()) + ": " + e.message());
    } catch (const Error& e) {
      throw Error(cfg.input_path + ": " + e.what());
    }

    if (cfg.mode == Mode::EmitLf) {
      const auto annotated = extract(stmts);
      res.output = emit_lf(annotated);
      const bool any = std::any_of(annotated.begin(), annotated.end(),
                                   [](const AnnotatedStmt& a) { return a.goal.has_value(); });
      res.exit_code = any ? 0 : 2;
      return res;
    }

    CommentOptions opts{cfg.limits, cfg.variants, cfg.verify, cfg.jobs};
    const auto reports =
        comment_statements(base, stmts, json_input ? std::string_view{} : text, opts);
    res.output = cfg.mode == Mode::Annotate ? annotate(text, reports) : to_jsonl(reports);
    const auto summary = report_coverage(reports);
    res.diagnostics = format_coverage(summary);
    res.exit_code = summary.commented > 0 ? 0 : 2;
  } catch (const std::exception& e) {
    res.output.clear();
    res.diagnostics += std::string("error: ") + e.what() + "\n";
    res.exit_code = 1;
  }
  return res;
}

}  // namespace ccgc
