#include "ccgcomment/extractor.hpp"

#include <utility>

namespace ccgc {
namespace {

const char* binop_name(const std::string& op) {
  if (op == "+") return "plus";
  if (op == "-") return "minus";
  if (op == "*") return "times";
  if (op == "/") return "quotient";
  if (op == "%") return "remainder";
  return "power";
}

const char* compare_name(const std::string& op) {
  if (op == "==") return "equality";
  if (op == "!=") return "inequality";
  if (op == "<") return "less";
  if (op == "<=") return "less_equal";
  if (op == ">") return "greater";
  return "greater_equal";
}

std::vector<Term> render_all(const std::vector<Expr>& es) {
  std::vector<Term> out;
  out.reserve(es.size());
  for (const auto& e : es) out.push_back(render(e));
  return out;
}

std::optional<TypeTag> literal_tag(const Expr& e) {
  switch (e.kind) {
    case ExprKind::ListLit: return TypeTag::List;
    case ExprKind::DictLit: return TypeTag::Dictionary;
    case ExprKind::NumLit: return TypeTag::Number;
    case ExprKind::StrLit: return TypeTag::String;
    default: return std::nullopt;
  }
}

std::vector<Term> loop_goal(const SourceStmt& st, const TypeEnv& env) {
  const Expr& target = st.operands[0];
  const Expr& iter = st.operands[1];
  if (iter.kind == ExprKind::Call && iter.text == "range" &&
      !iter.items.empty() && iter.items.size() <= 3) {
    std::vector<Term> g{pred("iterate"), pred("counter", {render(target)})};
    const auto& a = iter.items;
    if (a.size() == 1) {
      g.push_back(pred("upper", {render(a[0])}));
    } else {
      g.push_back(pred("lower", {render(a[0])}));
      g.push_back(pred("upper", {render(a[1])}));
      if (a.size() == 3) g.push_back(pred("step", {render(a[2])}));
    }
    return g;
  }
  if (iter.kind != ExprKind::Name) {
    return {pred("iterate"), pred("element"), pred("collection", {render(iter)})};
  }
  const Term coll = render(iter);
  switch (env.lookup(iter.text)) {
    case TypeTag::List:
      return {pred("iterate"), pred("element"), pred("list", {coll})};
    case TypeTag::Dictionary:
      return {pred("iterate"), pred("keys"), pred("dictionary", {coll})};
    case TypeTag::String:
      return {pred("iterate"), pred("character"), pred("string", {coll})};
    default:
      return {pred("iterate"), pred("element"), pred("collection", {coll})};
  }
}

std::vector<Term> goal_of(const SourceStmt& st, const TypeEnv& env) {
  const auto& ops = st.operands;
  switch (st.kind) {
    case StmtKind::Assign:
      return {pred("assign", {render(ops[0]), render(ops[1])})};
    case StmtKind::AugAssign: {
      const Term v = render(ops[0]);
      const Term e = render(ops[1]);
      if (st.op == "+") return {pred("increase", {v, e})};
      if (st.op == "-") return {pred("decrease", {v, e})};
      if (st.op == "*") return {pred("multiply", {v, e})};
      if (st.op == "/") return {pred("divide", {v, e})};
      return {pred("assign", {v, pred(binop_name(st.op), {v, e})})};
    }
    case StmtKind::If:
      return {pred("condition"), render_cond(ops[0])};
    case StmtKind::While:
      return {pred("loop"), pred("while"), render_cond(ops[0])};
    case StmtKind::ForIn:
      return loop_goal(st, env);
    case StmtKind::FuncDef: {
      std::vector<Term> ps;
      for (const auto& p : st.params) ps.push_back(constant(p));
      return {pred("define"), pred("function", {constant(st.name)}),
              pred("parameters", std::move(ps))};
    }
    case StmtKind::Return:
      if (ops.empty()) return {pred("return")};
      return {pred("return"), pred("value", {render(ops[0])})};
    case StmtKind::ExprCall: {
      const Expr& call = ops[0];
      return {pred("call"), pred("function", {constant(call.text)}),
              pred("arguments", render_all(call.items))};
    }
    case StmtKind::IOPrint: {
      const Expr& call = ops[0];
      if (call.items.empty()) return {pred("output")};
      return {pred("output"), pred("value", render_all(call.items))};
    }
    case StmtKind::IORead:
      if (ops.size() == 1) return {pred("input")};
      return {pred("input"), pred("target", {render(ops[0])})};
    case StmtKind::Unsupported:
      break;
  }
  return {};
}

void update(const SourceStmt& st, TypeEnv& env) {
  const auto& ops = st.operands;
  if (ops.empty() || ops[0].kind != ExprKind::Name) return;
  if (st.kind == StmtKind::Assign) {
    if (auto tag = literal_tag(ops[1])) env.bind(ops[0].text, *tag);
  } else if (st.kind == StmtKind::IORead && ops.size() == 2) {
    env.bind(ops[0].text, TypeTag::String);
  } else if (st.kind == StmtKind::ForIn) {
    env.bind(ops[0].text, TypeTag::Unknown);
  }
}

SourceStmt header(const SourceStmt& st) {
  SourceStmt h;
  h.kind = st.kind;
  h.loc = st.loc;
  h.operands = st.operands;
  h.name = st.name;
  h.op = st.op;
  h.reason = st.reason;
  h.params = st.params;
  h.is_elif = st.is_elif;
  return h;
}

void walk(const std::vector<SourceStmt>& stmts, TypeEnv& env,
          std::vector<AnnotatedStmt>& out) {
  for (const auto& st : stmts) {
    AnnotatedStmt a{header(st), std::nullopt};
    if (st.kind != StmtKind::Unsupported) a.goal.emplace(goal_of(st, env));
    out.push_back(std::move(a));
    update(st, env);
    if (st.kind == StmtKind::FuncDef) {
      TypeEnv inner = env;
      for (const auto& p : st.params) inner.bind(p, TypeTag::Unknown);
      walk(st.body, inner, out);
    } else {
      walk(st.body, env, out);
      walk(st.orelse, env, out);
    }
  }
}

}  // namespace

const char* to_string(TypeTag t) {
  switch (t) {
    case TypeTag::List: return "list";
    case TypeTag::Dictionary: return "dictionary";
    case TypeTag::Number: return "number";
    case TypeTag::String: return "string";
    case TypeTag::Unknown: return "unknown";
  }
  return "unknown";
}

TypeTag TypeEnv::lookup(const std::string& name) const {
  auto it = bindings_.find(name);
  return it == bindings_.end() ? TypeTag::Unknown : it->second;
}

void TypeEnv::bind(const std::string& name, TypeTag tag) { bindings_[name] = tag; }

Term render(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Name:
    case ExprKind::NumLit:
      return constant(e.text);
    case ExprKind::StrLit:
      return pred("text");
    case ExprKind::ListLit:
      return pred(e.items.empty() ? "empty_list" : "new_list");
    case ExprKind::DictLit:
      return pred(e.items.empty() ? "empty_dictionary" : "new_dictionary");
    case ExprKind::BinOp:
      return pred(binop_name(e.text), {render(e.items[0]), render(e.items[1])});
    case ExprKind::Index:
      return pred("item", {render(e.items[0]), render(e.items[1])});
    case ExprKind::Call: {
      std::vector<Term> args{constant(e.text)};
      for (const auto& a : e.items) args.push_back(render(a));
      return pred("result", std::move(args));
    }
    case ExprKind::Compare:
    case ExprKind::BoolOp:
      return render_cond(e);
  }
  return constant(e.text);
}

Term render_cond(const Expr& e) {
  if (e.kind == ExprKind::Compare) {
    return pred(compare_name(e.text), {render(e.items[0]), render(e.items[1])});
  }
  if (e.kind == ExprKind::BoolOp) {
    if (e.text == "not") return pred("negation", {render_cond(e.items[0])});
    const char* name = e.text == "and" ? "conjunction" : "disjunction";
    Term acc = render_cond(e.items[0]);
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      acc = pred(name, {acc, render_cond(e.items[i])});
    }
    return acc;
  }
  return pred("truth", {render(e)});
}

std::vector<AnnotatedStmt> extract(const std::vector<SourceStmt>& stmts,
                                   const TypeEnv& initial) {
  std::vector<AnnotatedStmt> out;
  TypeEnv env = initial;
  walk(stmts, env, out);
  return out;
}

}  // namespace ccgc
