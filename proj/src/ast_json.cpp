#include <algorithm>
#include <array>
#include <cctype>
#include <initializer_list>
#include <string>

#include <nlohmann/json.hpp>

#include "ccgcomment/error.hpp"
#include "ccgcomment/frontend.hpp"

namespace ccgc {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

constexpr std::array<std::string_view, 6> kBinOps{"+", "-", "*", "/", "%", "**"};
constexpr std::array<std::string_view, 6> kCmpOps{"==", "!=", "<", "<=", ">", ">="};
constexpr std::array<std::string_view, 6> kAugOps{"+", "-", "*", "/", "%", "**"};

template <std::size_t N>
bool member(const std::array<std::string_view, N>& set, const std::string& s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

// --- dump ---------------------------------------------------------------------

Json dump_expr(const Expr& e) {
  Json j;
  j["kind"] = to_string(e.kind);
  switch (e.kind) {
    case ExprKind::Name:
      j["id"] = e.text;
      break;
    case ExprKind::NumLit:
    case ExprKind::StrLit:
      j["value"] = e.text;
      break;
    case ExprKind::ListLit: {
      Json items = Json::array();
      for (const auto& it : e.items) items.push_back(dump_expr(it));
      j["items"] = std::move(items);
      break;
    }
    case ExprKind::DictLit: {
      Json pairs = Json::array();
      for (std::size_t i = 0; i + 1 < e.items.size(); i += 2) {
        pairs.push_back(Json::array({dump_expr(e.items[i]), dump_expr(e.items[i + 1])}));
      }
      j["pairs"] = std::move(pairs);
      break;
    }
    case ExprKind::BinOp:
    case ExprKind::Compare:
      j["op"] = e.text;
      j["left"] = dump_expr(e.items[0]);
      j["right"] = dump_expr(e.items[1]);
      break;
    case ExprKind::BoolOp: {
      j["op"] = e.text;
      Json args = Json::array();
      for (const auto& a : e.items) args.push_back(dump_expr(a));
      j["args"] = std::move(args);
      break;
    }
    case ExprKind::Call: {
      j["func"] = e.text;
      Json args = Json::array();
      for (const auto& a : e.items) args.push_back(dump_expr(a));
      j["args"] = std::move(args);
      break;
    }
    case ExprKind::Index:
      j["base"] = dump_expr(e.items[0]);
      j["subscript"] = dump_expr(e.items[1]);
      break;
  }
  return j;
}

Json dump_block(const std::vector<SourceStmt>& stmts);

Json dump_stmt(const SourceStmt& st) {
  Json j;
  j["kind"] = to_string(st.kind);
  j["loc"] = Json::array({st.loc.line, st.loc.column});
  const auto& ops = st.operands;
  switch (st.kind) {
    case StmtKind::Assign:
      j["target"] = dump_expr(ops[0]);
      j["value"] = dump_expr(ops[1]);
      break;
    case StmtKind::AugAssign:
      j["target"] = dump_expr(ops[0]);
      j["op"] = st.op;
      j["value"] = dump_expr(ops[1]);
      break;
    case StmtKind::If:
      j["test"] = dump_expr(ops[0]);
      j["body"] = dump_block(st.body);
      j["orelse"] = dump_block(st.orelse);
      j["elif"] = st.is_elif;
      break;
    case StmtKind::While:
      j["test"] = dump_expr(ops[0]);
      j["body"] = dump_block(st.body);
      break;
    case StmtKind::ForIn:
      j["target"] = dump_expr(ops[0]);
      j["iter"] = dump_expr(ops[1]);
      j["body"] = dump_block(st.body);
      break;
    case StmtKind::FuncDef:
      j["name"] = st.name;
      j["params"] = st.params;
      j["body"] = dump_block(st.body);
      break;
    case StmtKind::Return:
      j["value"] = ops.empty() ? Json(nullptr) : dump_expr(ops[0]);
      break;
    case StmtKind::ExprCall:
    case StmtKind::IOPrint:
      j["call"] = dump_expr(ops[0]);
      break;
    case StmtKind::IORead:
      j["target"] = ops.size() == 2 ? dump_expr(ops[0]) : Json(nullptr);
      j["call"] = dump_expr(ops.back());
      break;
    case StmtKind::Unsupported:
      j["reason"] = st.reason;
      j["body"] = dump_block(st.body);
      break;
  }
  return j;
}

Json dump_block(const std::vector<SourceStmt>& stmts) {
  Json arr = Json::array();
  for (const auto& st : stmts) arr.push_back(dump_stmt(st));
  return arr;
}

// --- ingest -------------------------------------------------------------------

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  const auto first = static_cast<unsigned char>(s[0]);
  if (std::isdigit(first) != 0) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) != 0 || c == '_' || u >= 0x80;
  });
}

class Reader {
 public:
  std::vector<SourceStmt> document(const Json& j) {
    object(j, "", {"schema_version", "body"});
    const Json& v = field(j, "", "schema_version");
    if (!v.is_number_integer() || v.get<long long>() != kSchemaVersion) {
      throw SchemaError("/schema_version", "expected schema version 1");
    }
    return block(field(j, "", "body"), "/body");
  }

 private:
  static void object(const Json& j, const std::string& path,
                     std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      const bool known = std::any_of(allowed.begin(), allowed.end(),
                                     [&](const char* k) { return it.key() == k; });
      if (!known) throw SchemaError(path + "/" + it.key(), "unexpected field");
    }
  }

  static const Json& field(const Json& j, const std::string& path,
                           const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
      throw SchemaError(path + "/" + key, "missing required field");
    }
    return *it;
  }

  static std::string str(const Json& j, const std::string& path,
                         const char* key) {
    const Json& v = field(j, path, key);
    if (!v.is_string()) throw SchemaError(path + "/" + key, "expected a string");
    return v.get<std::string>();
  }

  static std::string ident(const Json& j, const std::string& path,
                           const char* key) {
    std::string s = str(j, path, key);
    if (!valid_identifier(s)) {
      throw SchemaError(path + "/" + key, "not a valid identifier");
    }
    return s;
  }

  static const Json& array(const Json& j, const std::string& path,
                           const char* key) {
    const Json& v = field(j, path, key);
    if (!v.is_array()) throw SchemaError(path + "/" + key, "expected an array");
    return v;
  }

  static std::string kind_of(const Json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    return str(j, path, "kind");
  }

  Expr expr(const Json& j, const std::string& path) {
    const std::string kind = kind_of(j, path);
    const auto k = expr_kind_from_string(kind);
    if (!k) throw SchemaError(path + "/kind", "unknown expression kind '" + kind + "'");
    switch (*k) {
      case ExprKind::Name:
        object(j, path, {"kind", "id"});
        return Expr::name(ident(j, path, "id"));
      case ExprKind::NumLit: {
        object(j, path, {"kind", "value"});
        std::string v = str(j, path, "value");
        const std::size_t digit = !v.empty() && v[0] == '-' ? 1 : 0;
        if (v.size() <= digit || (std::isdigit(static_cast<unsigned char>(v[digit])) == 0 &&
                                  v[digit] != '.')) {
          throw SchemaError(path + "/value", "not a numeric literal");
        }
        return Expr::number(std::move(v));
      }
      case ExprKind::StrLit:
        object(j, path, {"kind", "value"});
        return Expr::string(str(j, path, "value"));
      case ExprKind::ListLit:
        object(j, path, {"kind", "items"});
        return Expr::list(exprs(array(j, path, "items"), path + "/items"));
      case ExprKind::DictLit: {
        object(j, path, {"kind", "pairs"});
        const Json& pairs = array(j, path, "pairs");
        std::vector<Expr> items;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          const std::string p = path + "/pairs/" + std::to_string(i);
          if (!pairs[i].is_array() || pairs[i].size() != 2) {
            throw SchemaError(p, "expected a [key, value] pair");
          }
          items.push_back(expr(pairs[i][0], p + "/0"));
          items.push_back(expr(pairs[i][1], p + "/1"));
        }
        return Expr::dict(std::move(items));
      }
      case ExprKind::BinOp:
      case ExprKind::Compare: {
        object(j, path, {"kind", "op", "left", "right"});
        std::string op = str(j, path, "op");
        const bool ok = *k == ExprKind::BinOp ? member(kBinOps, op) : member(kCmpOps, op);
        if (!ok) throw SchemaError(path + "/op", "unknown operator '" + op + "'");
        Expr l = expr(field(j, path, "left"), path + "/left");
        Expr r = expr(field(j, path, "right"), path + "/right");
        return *k == ExprKind::BinOp ? Expr::binop(op, std::move(l), std::move(r))
                                     : Expr::compare(op, std::move(l), std::move(r));
      }
      case ExprKind::BoolOp: {
        object(j, path, {"kind", "op", "args"});
        std::string op = str(j, path, "op");
        auto args = exprs(array(j, path, "args"), path + "/args");
        if (op == "not") {
          if (args.size() != 1) throw SchemaError(path + "/args", "'not' takes one operand");
        } else if (op == "and" || op == "or") {
          if (args.size() < 2) {
            throw SchemaError(path + "/args", "'" + op + "' takes at least two operands");
          }
        } else {
          throw SchemaError(path + "/op", "unknown operator '" + op + "'");
        }
        return Expr::boolop(op, std::move(args));
      }
      case ExprKind::Call:
        object(j, path, {"kind", "func", "args"});
        return Expr::call(ident(j, path, "func"),
                          exprs(array(j, path, "args"), path + "/args"));
      case ExprKind::Index:
        object(j, path, {"kind", "base", "subscript"});
        return Expr::index(expr(field(j, path, "base"), path + "/base"),
                           expr(field(j, path, "subscript"), path + "/subscript"));
    }
    throw SchemaError(path, "unreachable");
  }

  std::vector<Expr> exprs(const Json& arr, const std::string& path) {
    std::vector<Expr> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      out.push_back(expr(arr[i], path + "/" + std::to_string(i)));
    }
    return out;
  }

  Expr target(const Json& j, const std::string& path) {
    Expr e = expr(j, path);
    if (e.kind != ExprKind::Name && e.kind != ExprKind::Index) {
      throw SchemaError(path, "assignment target must be a Name or Index");
    }
    return e;
  }

  Expr call(const Json& j, const std::string& path, const char* fn) {
    Expr e = expr(j, path);
    if (e.kind != ExprKind::Call) throw SchemaError(path, "expected a Call");
    if (fn != nullptr && e.text != fn) {
      throw SchemaError(path + "/func", std::string("expected a call of ") + fn);
    }
    return e;
  }

  static Location location(const Json& j, const std::string& path) {
    const Json& loc = field(j, path, "loc");
    if (!loc.is_array() || loc.size() != 2 || !loc[0].is_number_unsigned() ||
        !loc[1].is_number_unsigned() || loc[0].get<std::size_t>() == 0) {
      throw SchemaError(path + "/loc", "expected [line >= 1, column >= 0]");
    }
    return {loc[0].get<std::size_t>(), loc[1].get<std::size_t>()};
  }

  SourceStmt stmt(const Json& j, const std::string& path) {
    const std::string kind = kind_of(j, path);
    const auto k = stmt_kind_from_string(kind);
    if (!k) throw SchemaError(path + "/kind", "unknown statement kind '" + kind + "'");
    SourceStmt st;
    st.kind = *k;
    st.loc = location(j, path);
    auto& ops = st.operands;
    switch (*k) {
      case StmtKind::Assign:
        object(j, path, {"kind", "loc", "target", "value"});
        ops.push_back(target(field(j, path, "target"), path + "/target"));
        ops.push_back(expr(field(j, path, "value"), path + "/value"));
        break;
      case StmtKind::AugAssign:
        object(j, path, {"kind", "loc", "target", "op", "value"});
        ops.push_back(target(field(j, path, "target"), path + "/target"));
        st.op = str(j, path, "op");
        if (!member(kAugOps, st.op)) {
          throw SchemaError(path + "/op", "unknown operator '" + st.op + "'");
        }
        ops.push_back(expr(field(j, path, "value"), path + "/value"));
        break;
      case StmtKind::If: {
        object(j, path, {"kind", "loc", "test", "body", "orelse", "elif"});
        ops.push_back(expr(field(j, path, "test"), path + "/test"));
        st.body = block(array(j, path, "body"), path + "/body");
        st.orelse = block(array(j, path, "orelse"), path + "/orelse");
        const Json& e = field(j, path, "elif");
        if (!e.is_boolean()) throw SchemaError(path + "/elif", "expected a boolean");
        st.is_elif = e.get<bool>();
        break;
      }
      case StmtKind::While:
        object(j, path, {"kind", "loc", "test", "body"});
        ops.push_back(expr(field(j, path, "test"), path + "/test"));
        st.body = block(array(j, path, "body"), path + "/body");
        break;
      case StmtKind::ForIn: {
        object(j, path, {"kind", "loc", "target", "iter", "body"});
        Expr t = expr(field(j, path, "target"), path + "/target");
        if (t.kind != ExprKind::Name) {
          throw SchemaError(path + "/target", "loop target must be a Name");
        }
        ops.push_back(std::move(t));
        ops.push_back(expr(field(j, path, "iter"), path + "/iter"));
        st.body = block(array(j, path, "body"), path + "/body");
        break;
      }
      case StmtKind::FuncDef: {
        object(j, path, {"kind", "loc", "name", "params", "body"});
        st.name = ident(j, path, "name");
        const Json& ps = array(j, path, "params");
        for (std::size_t i = 0; i < ps.size(); ++i) {
          const std::string p = path + "/params/" + std::to_string(i);
          if (!ps[i].is_string() || !valid_identifier(ps[i].get<std::string>())) {
            throw SchemaError(p, "expected an identifier");
          }
          st.params.push_back(ps[i].get<std::string>());
        }
        st.body = block(array(j, path, "body"), path + "/body");
        break;
      }
      case StmtKind::Return: {
        object(j, path, {"kind", "loc", "value"});
        const Json& v = field(j, path, "value");
        if (!v.is_null()) ops.push_back(expr(v, path + "/value"));
        break;
      }
      case StmtKind::ExprCall:
      case StmtKind::IOPrint:
        object(j, path, {"kind", "loc", "call"});
        ops.push_back(call(field(j, path, "call"), path + "/call",
                           *k == StmtKind::IOPrint ? "print" : nullptr));
        break;
      case StmtKind::IORead: {
        object(j, path, {"kind", "loc", "target", "call"});
        const Json& t = field(j, path, "target");
        if (!t.is_null()) ops.push_back(target(t, path + "/target"));
        ops.push_back(call(field(j, path, "call"), path + "/call", "input"));
        break;
      }
      case StmtKind::Unsupported:
        object(j, path, {"kind", "loc", "reason", "body"});
        st.reason = str(j, path, "reason");
        st.body = block(array(j, path, "body"), path + "/body");
        break;
    }
    return st;
  }

  std::vector<SourceStmt> block(const Json& arr, const std::string& path) {
    if (!arr.is_array()) throw SchemaError(path, "expected an array");
    std::vector<SourceStmt> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      out.push_back(stmt(arr[i], path + "/" + std::to_string(i)));
    }
    return out;
  }
};

}  // namespace

std::string dump_ast(const std::vector<SourceStmt>& stmts) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["body"] = dump_block(stmts);
  return doc.dump(2) + "\n";
}

std::vector<SourceStmt> ingest_ast(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return Reader().document(doc);
}

}  // namespace ccgc
