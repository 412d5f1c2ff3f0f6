#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ccgcomment/python_ast.hpp"

namespace ccgc {

/// Parses Python source into the subset AST. Constructs outside the subset
/// become Unsupported statements and parsing continues after them. Throws
/// SyntaxError only for lexical faults: bad indentation, unterminated
/// strings or brackets, stray characters.
std::vector<SourceStmt> parse_source(std::string_view text);

/// JSON interchange form, `schema_version` 1.
std::string dump_ast(const std::vector<SourceStmt>& stmts);

/// Reads the JSON interchange form. Throws SchemaError naming the offending
/// JSON path.
std::vector<SourceStmt> ingest_ast(std::string_view json_text);

}  // namespace ccgc
