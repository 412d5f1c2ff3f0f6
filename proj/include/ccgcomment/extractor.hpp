#pragma once

// Logical forms for source statements.
//
// Each supported statement becomes a Goal. Scopes: a function body sees a
// copy of the enclosing bindings with its parameters unknown; other blocks
// share the enclosing scope. Bindings change only on literal assignments
// and reads, in statement order.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccgcomment/goal.hpp"
#include "ccgcomment/lambda.hpp"
#include "ccgcomment/python_ast.hpp"

namespace ccgc {

enum class TypeTag { List, Dictionary, Number, String, Unknown };

const char* to_string(TypeTag t);

class TypeEnv {
 public:
  TypeTag lookup(const std::string& name) const;
  void bind(const std::string& name, TypeTag tag);
  const std::map<std::string, TypeTag>& bindings() const { return bindings_; }

 private:
  std::map<std::string, TypeTag> bindings_;
};

struct AnnotatedStmt {
  /// The statement without its nested bodies.
  SourceStmt stmt;
  /// Absent for Unsupported statements.
  std::optional<Goal> goal;
};

/// Goals for every statement in document order, nested statements included.
/// `initial` seeds the top-level scope, e.g. with types from another
/// analysis.
std::vector<AnnotatedStmt> extract(const std::vector<SourceStmt>& stmts,
                                   const TypeEnv& initial = {});

/// Ground term for an expression.
Term render(const Expr& e);

/// Predicate for a boolean test.
Term render_cond(const Expr& e);

}  // namespace ccgc
