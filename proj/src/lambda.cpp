#include "ccgcomment/lambda.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "ccgcomment/error.hpp"

namespace ccgc {

Term Term::make(TermKind kind, std::string name, std::vector<Term> kids) {
  return Term(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(kids)}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  return a.node_->kids == b.node_->kids;
}

Term var(std::string name) {
  return Term::make(TermKind::Var, std::move(name), {});
}
Term constant(std::string name) {
  return Term::make(TermKind::Const, std::move(name), {});
}
Term pred(std::string name, std::vector<Term> args) {
  return Term::make(TermKind::Pred, std::move(name), std::move(args));
}
Term abs(std::string param, Term body) {
  return Term::make(TermKind::Abs, std::move(param), {std::move(body)});
}
Term app(Term fn, Term arg) {
  return Term::make(TermKind::App, {}, {std::move(fn), std::move(arg)});
}
Term conj(Term left, Term right) {
  return Term::make(TermKind::Conj, {}, {std::move(left), std::move(right)});
}

Term conj_all(const std::vector<Term>& terms) {
  if (terms.empty()) throw std::invalid_argument("conj_all of nothing");
  Term out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) out = conj(out, terms[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Queries

std::size_t size(const Term& t) {
  std::size_t n = 1;
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const:
      break;
    case TermKind::Pred:
      for (const auto& a : t.args()) n += size(a);
      break;
    case TermKind::Abs:
      n += size(t.body());
      break;
    case TermKind::App:
    case TermKind::Conj:
      n += size(t.left()) + size(t.right());
      break;
  }
  return n;
}

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) {
        out.insert(t.name());
      }
      break;
    case TermKind::Const:
      break;
    case TermKind::Pred:
      for (const auto& a : t.args()) collect_free(a, bound, out);
      break;
    case TermKind::Abs:
      bound.push_back(t.name());
      collect_free(t.body(), bound, out);
      bound.pop_back();
      break;
    case TermKind::App:
    case TermKind::Conj:
      collect_free(t.left(), bound, out);
      collect_free(t.right(), bound, out);
      break;
  }
}

std::size_t count_free(const Term& t, const std::string& name) {
  switch (t.kind()) {
    case TermKind::Var:
      return t.name() == name ? 1 : 0;
    case TermKind::Const:
      return 0;
    case TermKind::Pred: {
      std::size_t n = 0;
      for (const auto& a : t.args()) n += count_free(a, name);
      return n;
    }
    case TermKind::Abs:
      return t.name() == name ? 0 : count_free(t.body(), name);
    case TermKind::App:
    case TermKind::Conj:
      return count_free(t.left(), name) + count_free(t.right(), name);
  }
  return 0;
}

bool occurs_free(const Term& t, const std::string& name) {
  switch (t.kind()) {
    case TermKind::Var:
      return t.name() == name;
    case TermKind::Const:
      return false;
    case TermKind::Pred:
      return std::any_of(t.args().begin(), t.args().end(),
                         [&](const Term& a) { return occurs_free(a, name); });
    case TermKind::Abs:
      return t.name() != name && occurs_free(t.body(), name);
    case TermKind::App:
    case TermKind::Conj:
      return occurs_free(t.left(), name) || occurs_free(t.right(), name);
  }
  return false;
}

bool mentions_constant(const Term& t, const std::string& name) {
  switch (t.kind()) {
    case TermKind::Var:
      return false;
    case TermKind::Const:
      return t.name() == name;
    case TermKind::Pred:
      return std::any_of(
          t.args().begin(), t.args().end(),
          [&](const Term& a) { return mentions_constant(a, name); });
    case TermKind::Abs:
      return mentions_constant(t.body(), name);
    case TermKind::App:
    case TermKind::Conj:
      return mentions_constant(t.left(), name) ||
             mentions_constant(t.right(), name);
  }
  return false;
}

}  // namespace

std::set<std::string> free_variables(const Term& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(t, bound, out);
  return out;
}

bool is_closed(const Term& t) { return free_variables(t).empty(); }

bool is_ground(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Abs:
      return false;
    case TermKind::Const:
      return true;
    case TermKind::Pred:
      return std::all_of(t.args().begin(), t.args().end(),
                         [](const Term& a) { return is_ground(a); });
    case TermKind::App:
    case TermKind::Conj:
      return is_ground(t.left()) && is_ground(t.right());
  }
  return false;
}

bool is_beta_normal(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const:
      return true;
    case TermKind::Pred:
      return std::all_of(t.args().begin(), t.args().end(),
                         [](const Term& a) { return is_beta_normal(a); });
    case TermKind::Abs:
      return is_beta_normal(t.body());
    case TermKind::App:
      return !t.fn().is(TermKind::Abs) && is_beta_normal(t.fn()) &&
             is_beta_normal(t.arg());
    case TermKind::Conj:
      return is_beta_normal(t.left()) && is_beta_normal(t.right());
  }
  return true;
}

bool is_linear(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const:
      return true;
    case TermKind::Pred:
      return std::all_of(t.args().begin(), t.args().end(),
                         [](const Term& a) { return is_linear(a); });
    case TermKind::Abs:
      return count_free(t.body(), t.name()) == 1 && is_linear(t.body());
    case TermKind::App:
    case TermKind::Conj:
      return is_linear(t.left()) && is_linear(t.right());
  }
  return true;
}

bool is_identity(const Term& t) {
  return t.is(TermKind::Abs) && t.body().is(TermKind::Var) &&
         t.body().name() == t.name();
}

std::vector<Term> flatten_conj(const Term& t) {
  std::vector<Term> out;
  std::vector<Term> work{t};
  // Depth-first, left before right.
  while (!work.empty()) {
    Term cur = work.back();
    work.pop_back();
    if (cur.is(TermKind::Conj)) {
      work.push_back(cur.right());
      work.push_back(cur.left());
    } else {
      out.push_back(cur);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Substitution and reduction

namespace {

Term subst(const Term& t, const std::string& x, const Term& v,
           const std::set<std::string>& value_free) {
  if (!occurs_free(t, x)) return t;
  switch (t.kind()) {
    case TermKind::Var:
      return v;  // occurs_free guarantees the name matches
    case TermKind::Const:
      return t;
    case TermKind::Pred: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(subst(a, x, v, value_free));
      return pred(t.name(), std::move(args));
    }
    case TermKind::App:
      return app(subst(t.fn(), x, v, value_free),
                 subst(t.arg(), x, v, value_free));
    case TermKind::Conj:
      return conj(subst(t.left(), x, v, value_free),
                  subst(t.right(), x, v, value_free));
    case TermKind::Abs: {
      std::string param = t.name();
      Term body = t.body();
      if (value_free.count(param) != 0) {
        std::set<std::string> avoid = free_variables(body);
        avoid.insert(value_free.begin(), value_free.end());
        avoid.insert(x);
        std::string fresh = param;
        do {
          fresh += '\'';
        } while (avoid.count(fresh) != 0);
        body = subst(body, param, var(fresh), {fresh});
        param = fresh;
      }
      return abs(param, subst(body, x, v, value_free));
    }
  }
  return t;
}

}  // namespace

Term substitute(const Term& term, const std::string& var_name,
                const Term& value) {
  return subst(term, var_name, value, free_variables(value));
}

std::optional<Term> reduce_step(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const:
      return std::nullopt;
    case TermKind::App: {
      if (t.fn().is(TermKind::Abs)) {
        return substitute(t.fn().body(), t.fn().name(), t.arg());
      }
      if (auto f = reduce_step(t.fn())) return app(*f, t.arg());
      if (auto a = reduce_step(t.arg())) return app(t.fn(), *a);
      return std::nullopt;
    }
    case TermKind::Abs:
      if (auto b = reduce_step(t.body())) return abs(t.name(), *b);
      return std::nullopt;
    case TermKind::Pred:
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (auto a = reduce_step(t.args()[i])) {
          std::vector<Term> args = t.args();
          args[i] = *a;
          return pred(t.name(), std::move(args));
        }
      }
      return std::nullopt;
    case TermKind::Conj:
      if (auto l = reduce_step(t.left())) return conj(*l, t.right());
      if (auto r = reduce_step(t.right())) return conj(t.left(), *r);
      return std::nullopt;
  }
  return std::nullopt;
}

Term beta_normalize(const Term& t, std::size_t fuel) {
  if (fuel == 0) throw std::invalid_argument("beta_normalize needs fuel > 0");
  Term cur = t;
  for (std::size_t i = 0; i < fuel; ++i) {
    auto next = reduce_step(cur);
    if (!next) return cur;
    cur = std::move(*next);
  }
  if (is_beta_normal(cur)) return cur;
  throw FuelExhausted(fuel);
}

// ---------------------------------------------------------------------------
// Equivalence

namespace {

void canon(const Term& t, std::vector<std::string>& binders, std::string& out) {
  switch (t.kind()) {
    case TermKind::Var: {
      auto it = std::find(binders.rbegin(), binders.rend(), t.name());
      if (it == binders.rend()) {
        out += "?" + t.name();
      } else {
        out += "#" + std::to_string(it - binders.rbegin());
      }
      break;
    }
    case TermKind::Const:
      out += "c:" + t.name();
      break;
    case TermKind::Pred:
      out += "p:" + t.name() + "(";
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i != 0) out += ",";
        canon(t.args()[i], binders, out);
      }
      out += ")";
      break;
    case TermKind::Abs:
      binders.push_back(t.name());
      out += "\\(";
      canon(t.body(), binders, out);
      out += ")";
      binders.pop_back();
      break;
    case TermKind::App:
      out += "@(";
      canon(t.fn(), binders, out);
      out += ",";
      canon(t.arg(), binders, out);
      out += ")";
      break;
    case TermKind::Conj: {
      std::vector<std::string> parts;
      for (const auto& c : flatten_conj(t)) {
        std::string s;
        canon(c, binders, s);
        parts.push_back(std::move(s));
      }
      std::sort(parts.begin(), parts.end());
      out += "&(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += ",";
        out += parts[i];
      }
      out += ")";
      break;
    }
  }
}

}  // namespace

std::string canonical_key(const Term& t) {
  std::vector<std::string> binders;
  std::string out;
  canon(t, binders, out);
  return out;
}

bool equivalent(const Term& a, const Term& b) {
  return canonical_key(a) == canonical_key(b);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum class Ctx { Top, ConjLeft, ConjRight, AppFn, AppArg };

bool needs_parens(TermKind kind, Ctx ctx) {
  switch (kind) {
    case TermKind::Abs:
      return ctx != Ctx::Top;
    case TermKind::Conj:
      return ctx == Ctx::ConjRight || ctx == Ctx::AppFn || ctx == Ctx::AppArg;
    case TermKind::App:
      return ctx == Ctx::AppArg;
    default:
      return false;
  }
}

void print(const Term& t, Ctx ctx, std::string& out) {
  const bool parens = needs_parens(t.kind(), ctx);
  if (parens) out += '(';
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const:
      out += t.name();
      break;
    case TermKind::Pred:
      out += t.name();
      out += '(';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i != 0) out += ", ";
        print(t.args()[i], Ctx::Top, out);
      }
      out += ')';
      break;
    case TermKind::Abs: {
      // A constant spelled like the parameter would read back as the bound
      // variable; print under a fresh parameter name instead.
      std::string param = t.name();
      Term body = t.body();
      if (mentions_constant(body, param)) {
        std::string fresh = param;
        do {
          fresh += '\'';
        } while (mentions_constant(body, fresh) || occurs_free(body, fresh));
        body = substitute(body, param, var(fresh));
        param = fresh;
      }
      out += '\\';
      out += param;
      out += ". ";
      print(body, Ctx::Top, out);
      break;
    }
    case TermKind::App:
      print(t.fn(), Ctx::AppFn, out);
      out += ' ';
      print(t.arg(), Ctx::AppArg, out);
      break;
    case TermKind::Conj:
      print(t.left(), Ctx::ConjLeft, out);
      out += " & ";
      print(t.right(), Ctx::ConjRight, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print(t, Ctx::Top, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Backslash, Dot, LParen, RParen, Comma, Amp, Ident, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
  bool call = false;  // identifier immediately followed by '('
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' ||
         c == '\'';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex_term(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    switch (c) {
      case '\\':
        out.push_back({Tok::Backslash, "\\", start});
        ++i;
        continue;
      case '.':
        out.push_back({Tok::Dot, ".", start});
        ++i;
        continue;
      case '(':
        out.push_back({Tok::LParen, "(", start});
        ++i;
        continue;
      case ')':
        out.push_back({Tok::RParen, ")", start});
        ++i;
        continue;
      case ',':
        out.push_back({Tok::Comma, ",", start});
        ++i;
        continue;
      case '&':
        out.push_back({Tok::Amp, "&", start});
        ++i;
        continue;
      default:
        break;
    }
    const bool numeric_sign = c == '-' && i + 1 < s.size() && is_digit(s[i + 1]);
    if (!ident_char(c) && !numeric_sign) {
      throw SyntaxError(std::string("unexpected character '") + c + "'", 0,
                        start);
    }
    const bool numeric = numeric_sign || is_digit(c);
    ++i;
    while (i < s.size()) {
      const char d = s[i];
      if (ident_char(d)) {
        ++i;
      } else if (numeric && d == '.' && i + 1 < s.size() && is_digit(s[i + 1])) {
        ++i;
      } else if (numeric && (d == '-' || d == '+') &&
                 (s[i - 1] == 'e' || s[i - 1] == 'E') && i + 1 < s.size() &&
                 is_digit(s[i + 1])) {
        ++i;
      } else {
        break;
      }
    }
    Token tok{Tok::Ident, std::string(s.substr(start, i - start)), start};
    tok.call = i < s.size() && s[i] == '(';
    out.push_back(std::move(tok));
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : toks_(lex_term(text)) {}

  Term parse() {
    Term t = term();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, 0, peek().pos);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      fail(std::string("expected ") + what +
           (peek().kind == Tok::End ? " at end of input"
                                    : ", found '" + peek().text + "'"));
    }
    ++pos_;
  }

  Term term() {
    if (peek().kind == Tok::Backslash) {
      ++pos_;
      if (peek().kind != Tok::Ident || peek().call) fail("expected parameter");
      std::string param = next().text;
      expect(Tok::Dot, "'.'");
      bound_.push_back(param);
      Term body = term();
      bound_.pop_back();
      return abs(std::move(param), std::move(body));
    }
    Term left = application();
    while (peek().kind == Tok::Amp) {
      ++pos_;
      left = conj(left, application());
    }
    return left;
  }

  bool starts_atom() const {
    return peek().kind == Tok::Ident || peek().kind == Tok::LParen;
  }

  Term application() {
    if (!starts_atom()) fail("expected a term");
    Term f = atom();
    while (starts_atom()) f = app(f, atom());
    return f;
  }

  Term atom() {
    if (peek().kind == Tok::LParen) {
      ++pos_;
      Term t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    const Token& tok = next();
    if (tok.call) {
      ++pos_;  // '('
      std::vector<Term> args;
      if (peek().kind != Tok::RParen) {
        args.push_back(term());
        while (peek().kind == Tok::Comma) {
          ++pos_;
          args.push_back(term());
        }
      }
      expect(Tok::RParen, "')'");
      return pred(tok.text, std::move(args));
    }
    if (std::find(bound_.begin(), bound_.end(), tok.text) != bound_.end()) {
      return var(tok.text);
    }
    return constant(tok.text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;
};

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

}  // namespace ccgc
