#include "ccgcomment/python_ast.hpp"

#include <array>
#include <cstdio>
#include <utility>

namespace ccgc {

Expr Expr::name(std::string id) { return {ExprKind::Name, std::move(id), {}}; }
Expr Expr::number(std::string literal) {
  return {ExprKind::NumLit, std::move(literal), {}};
}
Expr Expr::string(std::string value) {
  return {ExprKind::StrLit, std::move(value), {}};
}
Expr Expr::list(std::vector<Expr> items) {
  return {ExprKind::ListLit, {}, std::move(items)};
}
Expr Expr::dict(std::vector<Expr> keys_and_values) {
  return {ExprKind::DictLit, {}, std::move(keys_and_values)};
}
Expr Expr::binop(std::string op, Expr left, Expr right) {
  return {ExprKind::BinOp, std::move(op), {std::move(left), std::move(right)}};
}
Expr Expr::compare(std::string op, Expr left, Expr right) {
  return {ExprKind::Compare, std::move(op), {std::move(left), std::move(right)}};
}
Expr Expr::boolop(std::string op, std::vector<Expr> args) {
  return {ExprKind::BoolOp, std::move(op), std::move(args)};
}
Expr Expr::call(std::string fn, std::vector<Expr> args) {
  return {ExprKind::Call, std::move(fn), std::move(args)};
}
Expr Expr::index(Expr base, Expr subscript) {
  return {ExprKind::Index, {}, {std::move(base), std::move(subscript)}};
}

namespace {

constexpr std::array<std::pair<ExprKind, const char*>, 10> kExprNames{{
    {ExprKind::Name, "Name"},
    {ExprKind::NumLit, "NumLit"},
    {ExprKind::StrLit, "StrLit"},
    {ExprKind::ListLit, "ListLit"},
    {ExprKind::DictLit, "DictLit"},
    {ExprKind::BinOp, "BinOp"},
    {ExprKind::Compare, "Compare"},
    {ExprKind::BoolOp, "BoolOp"},
    {ExprKind::Call, "Call"},
    {ExprKind::Index, "Index"},
}};

constexpr std::array<std::pair<StmtKind, const char*>, 11> kStmtNames{{
    {StmtKind::Assign, "Assign"},
    {StmtKind::AugAssign, "AugAssign"},
    {StmtKind::If, "If"},
    {StmtKind::While, "While"},
    {StmtKind::ForIn, "ForIn"},
    {StmtKind::FuncDef, "FuncDef"},
    {StmtKind::Return, "Return"},
    {StmtKind::ExprCall, "ExprCall"},
    {StmtKind::IOPrint, "IOPrint"},
    {StmtKind::IORead, "IORead"},
    {StmtKind::Unsupported, "Unsupported"},
}};

// Binding strength, loosest first.
enum Prec : int {
  kOr = 1,
  kAnd,
  kNot,
  kCompare,
  kArith,
  kTerm,
  kUnary,
  kPower,
  kAtom
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::BoolOp:
      if (e.text == "or") return kOr;
      if (e.text == "and") return kAnd;
      return kNot;
    case ExprKind::Compare:
      return kCompare;
    case ExprKind::BinOp:
      if (e.text == "+" || e.text == "-") return kArith;
      if (e.text == "**") return kPower;
      return kTerm;
    case ExprKind::NumLit:
      return !e.text.empty() && e.text[0] == '-' ? kUnary : kAtom;
    default:
      return kAtom;
  }
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20 || c == 0x7f) {
          char buf[5];
          std::snprintf(buf, sizeof buf, "\\x%02x",
                        static_cast<unsigned>(static_cast<unsigned char>(c)));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string print(const Expr& e, int min_prec);

std::string join(const std::vector<Expr>& items, const char* sep, int prec) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += print(items[i], prec);
  }
  return out;
}

std::string print(const Expr& e, int min_prec) {
  std::string s;
  switch (e.kind) {
    case ExprKind::Name:
    case ExprKind::NumLit:
      s = e.text;
      break;
    case ExprKind::StrLit:
      s = quote(e.text);
      break;
    case ExprKind::ListLit:
      s = "[" + join(e.items, ", ", kOr) + "]";
      break;
    case ExprKind::DictLit:
      s = "{";
      for (std::size_t i = 0; i + 1 < e.items.size(); i += 2) {
        if (i > 0) s += ", ";
        s += print(e.items[i], kOr) + ": " + print(e.items[i + 1], kOr);
      }
      s += "}";
      break;
    case ExprKind::BinOp: {
      const int p = precedence(e);
      // Left-associative except `**`, whose left operand must be primary.
      const int lp = p == kPower ? kAtom : p;
      const int rp = p == kPower ? kUnary : p + 1;
      s = print(e.items[0], lp) + " " + e.text + " " + print(e.items[1], rp);
      break;
    }
    case ExprKind::Compare:
      s = print(e.items[0], kArith) + " " + e.text + " " +
          print(e.items[1], kArith);
      break;
    case ExprKind::BoolOp:
      if (e.text == "not") {
        s = "not " + print(e.items[0], kNot);
      } else {
        const int p = precedence(e);
        s = join(e.items, e.text == "or" ? " or " : " and ", p + 1);
      }
      break;
    case ExprKind::Call:
      s = e.text + "(" + join(e.items, ", ", kOr) + ")";
      break;
    case ExprKind::Index:
      s = print(e.items[0], kAtom) + "[" + print(e.items[1], kOr) + "]";
      break;
  }
  if (precedence(e) < min_prec) return "(" + s + ")";
  return s;
}

void print_block(const std::vector<SourceStmt>& stmts, int depth,
                 std::string& out);

void print_stmt(const SourceStmt& st, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 4, ' ');
  const auto& ops = st.operands;
  switch (st.kind) {
    case StmtKind::Assign:
      out += pad + to_source(ops[0]) + " = " + to_source(ops[1]) + "\n";
      return;
    case StmtKind::AugAssign:
      out += pad + to_source(ops[0]) + " " + st.op + "= " + to_source(ops[1]) +
             "\n";
      return;
    case StmtKind::If: {
      out += pad + (st.is_elif ? "elif " : "if ") + to_source(ops[0]) + ":\n";
      print_block(st.body, depth + 1, out);
      const auto& alt = st.orelse;
      if (alt.size() == 1 && alt[0].kind == StmtKind::If && alt[0].is_elif) {
        print_stmt(alt[0], depth, out);
      } else if (!alt.empty()) {
        out += pad + "else:\n";
        print_block(alt, depth + 1, out);
      }
      return;
    }
    case StmtKind::While:
      out += pad + "while " + to_source(ops[0]) + ":\n";
      print_block(st.body, depth + 1, out);
      return;
    case StmtKind::ForIn:
      out += pad + "for " + to_source(ops[0]) + " in " + to_source(ops[1]) +
             ":\n";
      print_block(st.body, depth + 1, out);
      return;
    case StmtKind::FuncDef: {
      out += pad + "def " + st.name + "(";
      for (std::size_t i = 0; i < st.params.size(); ++i) {
        if (i > 0) out += ", ";
        out += st.params[i];
      }
      out += "):\n";
      print_block(st.body, depth + 1, out);
      return;
    }
    case StmtKind::Return:
      out += pad + "return";
      if (!ops.empty()) out += " " + to_source(ops[0]);
      out += "\n";
      return;
    case StmtKind::ExprCall:
    case StmtKind::IOPrint:
      out += pad + to_source(ops[0]) + "\n";
      return;
    case StmtKind::IORead:
      out += pad;
      if (ops.size() == 2) out += to_source(ops[0]) + " = ";
      out += to_source(ops.back()) + "\n";
      return;
    case StmtKind::Unsupported:
      out += pad + "pass\n";
      return;
  }
}

void print_block(const std::vector<SourceStmt>& stmts, int depth,
                 std::string& out) {
  if (stmts.empty()) {
    out += std::string(static_cast<std::size_t>(depth) * 4, ' ') + "pass\n";
    return;
  }
  for (const auto& st : stmts) print_stmt(st, depth, out);
}

void collect(const std::vector<SourceStmt>& stmts,
             std::vector<const SourceStmt*>& out) {
  for (const auto& st : stmts) {
    out.push_back(&st);
    collect(st.body, out);
    collect(st.orelse, out);
  }
}

}  // namespace

const char* to_string(ExprKind k) {
  for (const auto& [kind, name] : kExprNames) {
    if (kind == k) return name;
  }
  return "?";
}

const char* to_string(StmtKind k) {
  for (const auto& [kind, name] : kStmtNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<ExprKind> expr_kind_from_string(std::string_view s) {
  for (const auto& [kind, name] : kExprNames) {
    if (s == name) return kind;
  }
  return std::nullopt;
}

std::optional<StmtKind> stmt_kind_from_string(std::string_view s) {
  for (const auto& [kind, name] : kStmtNames) {
    if (s == name) return kind;
  }
  return std::nullopt;
}

bool same_shape(const SourceStmt& a, const SourceStmt& b) {
  return a.kind == b.kind && a.operands == b.operands && a.name == b.name &&
         a.op == b.op && a.reason == b.reason && a.params == b.params &&
         a.is_elif == b.is_elif && same_shape(a.body, b.body) &&
         same_shape(a.orelse, b.orelse);
}

bool same_shape(const std::vector<SourceStmt>& a,
                const std::vector<SourceStmt>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_shape(a[i], b[i])) return false;
  }
  return true;
}

std::string to_source(const Expr& e) { return print(e, kOr); }

std::string to_source(const std::vector<SourceStmt>& stmts) {
  std::string out;
  for (const auto& st : stmts) print_stmt(st, 0, out);
  return out;
}

std::vector<const SourceStmt*> flatten(const std::vector<SourceStmt>& stmts) {
  std::vector<const SourceStmt*> out;
  collect(stmts, out);
  return out;
}

}  // namespace ccgc
