#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccgc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text: lambda terms, categories, lexicon files, subject source.
/// `line` is 1-based (0 when the input has no line structure), `column` is a
/// 0-based character offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)),
        message_(std::move(message)),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) {
      return "syntax error at position " + std::to_string(column) + ": " +
             message;
    }
    return "syntax error at line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

class FuelExhausted : public Error {
 public:
  explicit FuelExhausted(std::size_t fuel)
      : Error("beta normalization did not terminate within " +
              std::to_string(fuel) + " steps"),
        fuel_(fuel) {}
  std::size_t fuel() const noexcept { return fuel_; }

 private:
  std::size_t fuel_;
};

class DuplicateRootDecl : public Error {
 public:
  explicit DuplicateRootDecl(std::size_t line)
      : Error("duplicate roots declaration at line " + std::to_string(line)),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyLexicon : public Error {
 public:
  EmptyLexicon() : Error("lexicon contains no entries") {}
};

/// A lexicon entry whose semantics is unusable (not closed, not linear, or
/// does not normalize).
class LexiconError : public Error {
 public:
  LexiconError(const std::string& message, std::size_t line)
      : Error(line == 0 ? message
                        : "lexicon line " + std::to_string(line) + ": " +
                              message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownWord : public Error {
 public:
  UnknownWord(std::string token, std::size_t position)
      : Error("unknown word '" + token + "' at token " +
              std::to_string(position)),
        token_(std::move(token)),
        position_(position) {}
  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

class NoRealization : public Error {
 public:
  NoRealization() : Error("no realization exists within the search limits") {}
};

class LimitExceeded : public Error {
 public:
  explicit LimitExceeded(std::size_t max_expansions)
      : Error("search exceeded " + std::to_string(max_expansions) +
              " expansions"),
        max_expansions_(max_expansions) {}
  std::size_t max_expansions() const noexcept { return max_expansions_; }

 private:
  std::size_t max_expansions_;
};

class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error("schema error at " + (path.empty() ? std::string("/") : path) +
              ": " + message),
        path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class EmptyTokens : public Error {
 public:
  EmptyTokens() : Error("cannot finalize an empty token sequence") {}
};

}  // namespace ccgc
