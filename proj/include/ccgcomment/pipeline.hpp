#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccgcomment/error.hpp"
#include "ccgcomment/extractor.hpp"
#include "ccgcomment/lexicon.hpp"
#include "ccgcomment/python_ast.hpp"
#include "ccgcomment/realizer.hpp"
#include "ccgcomment/surface.hpp"

namespace ccgc {

enum class Mode { Annotate, Jsonl, EmitLf, ParseDebug };

std::optional<Mode> mode_from_string(std::string_view s);

struct RunConfig {
  std::string input_path;
  std::string lexicon_path;
  Mode mode = Mode::Annotate;
  /// Replaces the lexicon's root categories when non-empty, e.g.
  /// "S[imp],S[ger]".
  std::string roots;
  SearchLimits limits;
  std::size_t variants = 1;
  bool verify = false;
  /// Worker threads for realization; 0 picks the hardware concurrency.
  std::size_t jobs = 0;
};

enum class SkipReason { UnsupportedStmt, NoRealization, LimitExceeded };

const char* to_string(SkipReason r);

struct StmtReport {
  Location loc;
  StmtKind kind = StmtKind::Unsupported;
  std::string source;
  /// Printed goal predicates; empty for unsupported statements.
  std::vector<std::string> goal;
  std::optional<CommentText> comment;
  std::optional<SkipReason> skip;
  /// All realizations, cheapest first, when more than one was requested.
  std::vector<CommentText> variants;
};

struct CommentOptions {
  SearchLimits limits;
  std::size_t variants = 1;
  bool verify = false;
  std::size_t jobs = 0;
};

/// Thrown when `verify` is set and a comment does not parse back to its goal.
class VerificationFailure : public Error {
 public:
  VerificationFailure(const Location& loc, const std::string& comment)
      : Error("comment at line " + std::to_string(loc.line) +
              " does not parse back to its goal: " + comment) {}
};

/// The lexicon used for one file: `base` plus an NP entry for every constant
/// that occurs in the goals.
Lexicon file_lexicon(const Lexicon& base,
                     const std::vector<AnnotatedStmt>& annotated);

/// True when `comment` parses under `lex` to a root constituent whose
/// semantics is equivalent to `goal`.
bool round_trips(const Lexicon& lex, const CommentText& comment,
                 const Goal& goal);

/// One report per statement, in document order. `text` supplies the source
/// lines quoted in reports; it may be empty when the statements came from
/// JSON, in which case the printed statement is quoted instead.
std::vector<StmtReport> comment_statements(const Lexicon& base,
                                           const std::vector<SourceStmt>& stmts,
                                           std::string_view text,
                                           const CommentOptions& options = {});

/// `text` with `# comment` lines inserted above each commented statement.
std::string annotate(std::string_view text,
                     const std::vector<StmtReport>& reports);

std::string to_jsonl(const std::vector<StmtReport>& reports);
std::string emit_lf(const std::vector<AnnotatedStmt>& annotated);

/// Parses each line of `text` as a token sequence and prints the root
/// derivations. Unknown words become NP entries. Sets `parsed` to the number
/// of lines with at least one parse.
std::string parse_debug(const Lexicon& base, std::string_view text,
                        std::size_t& parsed);

struct CoverageSummary {
  std::size_t total = 0;
  std::size_t supported = 0;
  std::size_t commented = 0;
  std::size_t unsupported = 0;
  std::size_t no_realization = 0;
  std::size_t limit_exceeded = 0;
  friend bool operator==(const CoverageSummary&, const CoverageSummary&) = default;
};

CoverageSummary report_coverage(const std::vector<StmtReport>& reports);
std::string format_coverage(const CoverageSummary& s);

struct RunResult {
  int exit_code = 0;
  std::string output;       // standard output
  std::string diagnostics;  // standard error
};

/// Runs one CLI invocation without touching the standard streams. Exit code
/// 0 when at least one comment (or goal, or parse) was produced, 2 when none,
/// 1 on errors.
RunResult run(const RunConfig& cfg);

}  // namespace ccgc
