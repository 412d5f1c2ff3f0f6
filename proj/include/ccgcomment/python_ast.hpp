#pragma once

// AST for the analyzed Python subset.
//
// Operand layout per statement kind:
//   Assign      [target, value]              target is a Name or Index
//   AugAssign   [target, value]              `op` holds "+", "-", ...
//   If          [test]   body, orelse        `is_elif` marks an `elif` branch
//   While       [test]   body
//   ForIn       [target, iterable]  body     target is a Name
//   FuncDef     name, params, body
//   Return      [] or [value]
//   ExprCall    [call]
//   IOPrint     [call]                       the `print(...)` call
//   IORead      [call] or [target, call]     the `input(...)` call
//   Unsupported `reason`, body               body of an unsupported block
//
// An `elif` is stored as the single If in its parent's orelse.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccgc {

enum class ExprKind {
  Name,
  NumLit,
  StrLit,
  ListLit,
  DictLit,
  BinOp,
  Compare,
  BoolOp,
  Call,
  Index
};

struct Expr {
  ExprKind kind;
  /// Identifier, literal text (numbers keep their spelling, strings are
  /// decoded), operator, or callee name.
  std::string text;
  /// Operands; a DictLit alternates key, value.
  std::vector<Expr> items;

  friend bool operator==(const Expr&, const Expr&) = default;

  static Expr name(std::string id);
  static Expr number(std::string literal);
  static Expr string(std::string value);
  static Expr list(std::vector<Expr> items);
  static Expr dict(std::vector<Expr> keys_and_values);
  static Expr binop(std::string op, Expr left, Expr right);
  static Expr compare(std::string op, Expr left, Expr right);
  static Expr boolop(std::string op, std::vector<Expr> args);
  static Expr call(std::string fn, std::vector<Expr> args);
  static Expr index(Expr base, Expr subscript);
};

enum class StmtKind {
  Assign,
  AugAssign,
  If,
  While,
  ForIn,
  FuncDef,
  Return,
  ExprCall,
  IOPrint,
  IORead,
  Unsupported
};

struct Location {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 0-based
  friend auto operator<=>(const Location&, const Location&) = default;
};

struct SourceStmt {
  StmtKind kind = StmtKind::Unsupported;
  Location loc;
  std::vector<Expr> operands;
  std::string name;  // FuncDef name
  std::string op;    // AugAssign operator
  std::string reason;  // Unsupported
  std::vector<std::string> params;
  std::vector<SourceStmt> body;
  std::vector<SourceStmt> orelse;
  bool is_elif = false;

  friend bool operator==(const SourceStmt&, const SourceStmt&) = default;
};

const char* to_string(ExprKind k);
const char* to_string(StmtKind k);
std::optional<ExprKind> expr_kind_from_string(std::string_view s);
std::optional<StmtKind> stmt_kind_from_string(std::string_view s);

/// Structural equality that ignores source locations.
bool same_shape(const SourceStmt& a, const SourceStmt& b);
bool same_shape(const std::vector<SourceStmt>& a,
                const std::vector<SourceStmt>& b);

/// Python text for an expression, parenthesized only where needed.
std::string to_source(const Expr& e);

/// Python text for a statement list, four spaces per level. Unsupported
/// markers print as `pass`.
std::string to_source(const std::vector<SourceStmt>& stmts);

/// Statements in document order, nested bodies included (pre-order).
std::vector<const SourceStmt*> flatten(const std::vector<SourceStmt>& stmts);

}  // namespace ccgc
