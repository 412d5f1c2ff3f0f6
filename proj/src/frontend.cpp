#include "ccgcomment/frontend.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "ccgcomment/error.hpp"

namespace ccgc {
namespace {

// --- tokens -------------------------------------------------------------------

enum class Tok { Name, Number, String, Op, Newline, Indent, Dedent, End };

struct Token {
  Tok kind;
  std::string text;    // spelling; decoded value for strings
  std::string prefix;  // string prefix letters, lowercased
  std::size_t line;
  std::size_t col;
};

constexpr std::array<std::string_view, 47> kOperators{
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", "==", "!=",
    "<=",  ">=",  "+=",  "-=",  "*=",  "/=", "%=", "&=", "|=", "^=", "@=",
    "<<",  ">>",  "+",   "-",   "*",   "/",  "%",  "<",  ">",  "=",  "(",
    ")",   "[",   "]",   "{",   "}",   ",",  ":",  ".",  ";",  "@",  "&",
    "|",   "^",   "~"};

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool is_name_char(char c) {
  return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) != 0;
}

bool is_string_prefix(std::string_view s) {
  std::string p;
  for (char c : s) p += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  static constexpr std::array<std::string_view, 10> kPrefixes{
      "r", "u", "b", "f", "br", "rb", "fr", "rf", "ur", "ru"};
  return std::find(kPrefixes.begin(), kPrefixes.end(), p) != kPrefixes.end();
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    indents_.push_back({0, 0});
    while (pos_ < src_.size()) {
      if (at_line_start_ && depth_ == 0) {
        if (!indentation()) continue;
      }
      const char c = src_[pos_];
      if (c == '\n') {
        newline();
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\f' || c == '\r') {
        ++pos_;
        continue;
      }
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\\') {
        std::size_t j = pos_ + 1;
        if (j < src_.size() && src_[j] == '\r') ++j;
        if (j < src_.size() && src_[j] == '\n') {
          pos_ = j + 1;
          ++line_;
          line_start_ = pos_;
          continue;
        }
        fail("unexpected character after line continuation");
      }
      if (is_name_start(c)) {
        name_or_string();
      } else if (std::isdigit(static_cast<unsigned char>(c)) != 0 ||
                 (c == '.' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])) != 0)) {
        number();
      } else if (c == '"' || c == '\'') {
        string_literal("", pos_);
      } else {
        op();
      }
    }
    if (depth_ > 0) {
      throw SyntaxError("unexpected end of file inside brackets",
                        open_.back().first, open_.back().second);
    }
    if (!out_.empty() && out_.back().kind != Tok::Newline &&
        out_.back().kind != Tok::Dedent) {
      emit(Tok::Newline, "");
    }
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit(Tok::Dedent, "");
    }
    emit(Tok::End, "");
    return std::move(out_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, line_, pos_ - line_start_);
  }

  void emit(Tok kind, std::string text, std::string prefix = {},
            std::size_t at = std::string_view::npos) {
    const std::size_t start = at == std::string_view::npos ? pos_ : at;
    out_.push_back({kind, std::move(text), std::move(prefix), tok_line_,
                    start - tok_line_start_});
  }

  void begin_token() {
    tok_line_ = line_;
    tok_line_start_ = line_start_;
  }

  void newline() {
    if (depth_ == 0 && !at_line_start_) {
      begin_token();
      emit(Tok::Newline, "");
    }
    ++pos_;
    ++line_;
    line_start_ = pos_;
    if (depth_ == 0) at_line_start_ = true;
  }

  // Measures leading whitespace; returns false when the line is blank or a
  // comment (the caller then continues scanning without emitting tokens).
  bool indentation() {
    std::size_t wide = 0;  // tab stops every 8 columns
    std::size_t narrow = 0;  // tab counts as one column
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ') {
        ++wide;
        ++narrow;
      } else if (c == '\t') {
        wide = (wide / 8 + 1) * 8;
        ++narrow;
      } else if (c == '\f') {
        wide = narrow = 0;
      } else {
        break;
      }
      ++pos_;
    }
    if (pos_ >= src_.size()) return false;
    const char c = src_[pos_];
    if (c == '#' || c == '\n' || (c == '\r' && pos_ + 1 < src_.size() &&
                                  src_[pos_ + 1] == '\n')) {
      while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      if (pos_ < src_.size()) {
        ++pos_;
        ++line_;
        line_start_ = pos_;
      }
      return false;
    }
    at_line_start_ = false;
    begin_token();
    const auto [top_wide, top_narrow] = indents_.back();
    if (wide > top_wide) {
      if (narrow <= top_narrow) fail("inconsistent use of tabs and spaces");
      indents_.push_back({wide, narrow});
      emit(Tok::Indent, "");
    } else if (wide < top_wide) {
      while (indents_.back().first > wide) {
        indents_.pop_back();
        emit(Tok::Dedent, "");
      }
      if (indents_.back().first != wide) {
        fail("unindent does not match any outer indentation level");
      }
      if (indents_.back().second != narrow) {
        fail("inconsistent use of tabs and spaces");
      }
    } else if (narrow != top_narrow) {
      fail("inconsistent use of tabs and spaces");
    }
    return true;
  }

  void name_or_string() {
    begin_token();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_name_char(src_[pos_])) ++pos_;
    const std::string_view word = src_.substr(start, pos_ - start);
    if (pos_ < src_.size() && (src_[pos_] == '"' || src_[pos_] == '\'') &&
        is_string_prefix(word)) {
      std::string prefix;
      for (char ch : word) {
        prefix += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      }
      string_literal(prefix, start);
      return;
    }
    emit(Tok::Name, std::string(word), {}, start);
  }

  void number() {
    begin_token();
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) != 0 ||
              src_[pos_] == '_')) {
        const char c = src_[pos_];
        // Exponent sign.
        if ((c == 'e' || c == 'E') && pos_ + 1 < src_.size() &&
            (src_[pos_ + 1] == '+' || src_[pos_ + 1] == '-') &&
            !(src_.substr(start, 2) == "0x" || src_.substr(start, 2) == "0X")) {
          pos_ += 2;
          continue;
        }
        ++pos_;
      }
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      digits();
    }
    emit(Tok::Number, std::string(src_.substr(start, pos_ - start)), {}, start);
  }

  void string_literal(const std::string& prefix, std::size_t start) {
    if (prefix.empty()) begin_token();
    const char q = src_[pos_];
    const bool triple = src_.substr(pos_, 3) == std::string(3, q);
    const std::size_t open_line = line_;
    const std::size_t open_col = start - line_start_;
    pos_ += triple ? 3 : 1;
    const bool raw = prefix.find('r') != std::string::npos;
    std::string value;
    for (;;) {
      if (pos_ >= src_.size()) {
        throw SyntaxError("unterminated string literal", open_line, open_col);
      }
      const char c = src_[pos_];
      if (c == q) {
        if (!triple) {
          ++pos_;
          break;
        }
        if (src_.substr(pos_, 3) == std::string(3, q)) {
          pos_ += 3;
          break;
        }
      }
      if (c == '\n') {
        if (!triple) {
          throw SyntaxError("unterminated string literal", open_line, open_col);
        }
        value += c;
        ++pos_;
        ++line_;
        line_start_ = pos_;
        continue;
      }
      if (c == '\\' && pos_ + 1 < src_.size()) {
        if (raw) {
          value += c;
          value += src_[pos_ + 1];
          if (src_[pos_ + 1] == '\n') {
            ++line_;
            line_start_ = pos_ + 2;
          }
          pos_ += 2;
          continue;
        }
        escape(value);
        continue;
      }
      value += c;
      ++pos_;
    }
    emit(Tok::String, std::move(value), prefix, start);
  }

  void escape(std::string& value) {
    const char e = src_[pos_ + 1];
    pos_ += 2;
    auto hex = [&](std::size_t n) {
      unsigned long cp = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (pos_ >= src_.size() ||
            std::isxdigit(static_cast<unsigned char>(src_[pos_])) == 0) {
          fail("truncated escape sequence");
        }
        cp = cp * 16 + static_cast<unsigned long>(
                           std::stoi(std::string(1, src_[pos_]), nullptr, 16));
        ++pos_;
      }
      return cp;
    };
    switch (e) {
      case '\n':
        ++line_;
        line_start_ = pos_;
        return;
      case '\\': value += '\\'; return;
      case '\'': value += '\''; return;
      case '"': value += '"'; return;
      case 'a': value += '\a'; return;
      case 'b': value += '\b'; return;
      case 'f': value += '\f'; return;
      case 'n': value += '\n'; return;
      case 'r': value += '\r'; return;
      case 't': value += '\t'; return;
      case 'v': value += '\v'; return;
      case 'x': append_utf8(value, hex(2)); return;
      case 'u': append_utf8(value, hex(4)); return;
      case 'U': append_utf8(value, hex(8)); return;
      default:
        break;
    }
    if (e >= '0' && e <= '7') {
      unsigned long cp = static_cast<unsigned long>(e - '0');
      for (int i = 0; i < 2 && pos_ < src_.size() && src_[pos_] >= '0' &&
                      src_[pos_] <= '7';
           ++i) {
        cp = cp * 8 + static_cast<unsigned long>(src_[pos_] - '0');
        ++pos_;
      }
      append_utf8(value, cp);
      return;
    }
    // Unknown escapes keep their backslash.
    value += '\\';
    value += e;
  }

  void op() {
    begin_token();
    for (std::string_view o : kOperators) {
      if (src_.substr(pos_, o.size()) == o) {
        if (o == "(" || o == "[" || o == "{") {
          ++depth_;
          open_.push_back({line_, pos_ - line_start_});
          open_chars_.push_back(o[0]);
        } else if (o == ")" || o == "]" || o == "}") {
          if (depth_ == 0) fail("unmatched '" + std::string(o) + "'");
          const char want = open_chars_.back() == '(' ? ')' : open_chars_.back() == '[' ? ']' : '}';
          if (o[0] != want) {
            fail("'" + std::string(o) + "' does not match '" + open_chars_.back() + "'");
          }
          --depth_;
          open_.pop_back();
          open_chars_.pop_back();
        }
        emit(Tok::Op, std::string(o));
        pos_ += o.size();
        return;
      }
    }
    fail(std::string("invalid character '") + src_[pos_] + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
  std::size_t tok_line_ = 1;
  std::size_t tok_line_start_ = 0;
  int depth_ = 0;
  bool at_line_start_ = true;
  std::vector<std::pair<std::size_t, std::size_t>> indents_;
  std::vector<std::pair<std::size_t, std::size_t>> open_;
  std::vector<char> open_chars_;
  std::vector<Token> out_;
};

// --- parser -------------------------------------------------------------------

struct Unsupported {
  std::string reason;
};

constexpr std::array<std::string_view, 32> kKeywords{
    "and",    "as",     "assert", "async", "await",    "break",  "class",
    "continue", "def",  "del",    "elif",  "else",     "except", "finally",
    "for",    "from",   "global", "if",    "import",   "in",     "is",
    "lambda", "nonlocal", "not",  "or",    "pass",     "raise",  "return",
    "try",    "while",  "with",   "yield"};

bool is_keyword(std::string_view s) {
  return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end();
}

constexpr std::array<std::string_view, 6> kCompareOps{"==", "!=", "<",
                                                      "<=", ">",  ">="};
constexpr std::array<std::string_view, 6> kAugOps{"+=", "-=", "*=",
                                                  "/=", "%=", "**="};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<SourceStmt> file() {
    std::vector<SourceStmt> out;
    while (peek().kind != Tok::End) statement(out);
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at_op(std::string_view o, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Op && t.text == o;
  }
  bool at_name(std::string_view n, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::Name && t.text == n;
  }
  bool at_end_of_simple() const {
    return peek().kind == Tok::Newline || at_op(";") || peek().kind == Tok::End;
  }
  const Token& advance() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  void expect_op(std::string_view o, const char* what) {
    if (!at_op(o)) throw Unsupported{std::string("malformed ") + what};
    advance();
  }
  static Location loc(const Token& t) { return {t.line, t.col}; }

  // --- statements ---

  void statement(std::vector<SourceStmt>& out) {
    const Token& t = peek();
    if (t.kind == Tok::Indent) throw SyntaxError("unexpected indent", t.line, t.col);
    if (t.kind == Tok::Newline) {
      advance();
      return;
    }
    if (t.kind == Tok::Name) {
      if (t.text == "if" || t.text == "while" || t.text == "for" ||
          t.text == "def") {
        out.push_back(compound());
        return;
      }
      static constexpr std::array<std::string_view, 8> kBlocks{
          "class", "try", "with", "async", "elif", "else", "except", "finally"};
      if (std::find(kBlocks.begin(), kBlocks.end(), t.text) != kBlocks.end()) {
        out.push_back(skip_unsupported(t.text + " block"));
        return;
      }
    }
    if (at_op("@")) {
      out.push_back(skip_unsupported("decorator"));
      return;
    }
    simple_line(out);
  }

  // Consumes the rest of the logical line and any indented block under it.
  SourceStmt skip_unsupported(std::string reason) {
    SourceStmt st;
    st.kind = StmtKind::Unsupported;
    st.loc = loc(peek());
    st.reason = std::move(reason);
    bool colon = false;
    while (peek().kind != Tok::Newline && peek().kind != Tok::End) {
      colon = at_op(":");
      advance();
    }
    if (peek().kind == Tok::Newline) advance();
    if (colon && peek().kind == Tok::Indent) st.body = block();
    return st;
  }

  std::vector<SourceStmt> block() {
    advance();  // Indent
    std::vector<SourceStmt> out;
    while (peek().kind != Tok::Dedent && peek().kind != Tok::End) {
      statement(out);
    }
    if (peek().kind == Tok::Dedent) advance();
    return out;
  }

  std::vector<SourceStmt> suite() {
    if (peek().kind == Tok::Newline) {
      advance();
      if (peek().kind != Tok::Indent) {
        throw SyntaxError("expected an indented block", peek().line, peek().col);
      }
      return block();
    }
    std::vector<SourceStmt> out;
    simple_line(out);
    return out;
  }

  SourceStmt compound() {
    const std::size_t save = pos_;
    SourceStmt st;
    st.loc = loc(peek());
    const std::string kw = advance().text;
    try {
      if (kw == "if" || kw == "elif") {
        st.kind = StmtKind::If;
        st.is_elif = kw == "elif";
        st.operands.push_back(test());
      } else if (kw == "while") {
        st.kind = StmtKind::While;
        st.operands.push_back(test());
      } else if (kw == "for") {
        st.kind = StmtKind::ForIn;
        if (peek().kind != Tok::Name || is_keyword(peek().text) ||
            !at_name("in", 1)) {
          throw Unsupported{"loop target is not a single name"};
        }
        st.operands.push_back(Expr::name(advance().text));
        advance();  // in
        st.operands.push_back(test());
      } else {
        st.kind = StmtKind::FuncDef;
        def_header(st);
      }
      if (!at_op(":")) throw Unsupported{"malformed " + kw + " header"};
      advance();
    } catch (const Unsupported& u) {
      pos_ = save;
      SourceStmt bad = skip_unsupported(u.reason);
      if (kw == "if" || kw == "elif") skip_branches(bad);
      return bad;
    }
    st.body = suite();
    if (st.kind == StmtKind::If) {
      if (at_name("elif")) {
        st.orelse.push_back(compound());
      } else if (at_name("else") && at_op(":", 1)) {
        advance();
        advance();
        st.orelse = suite();
      }
    }
    return st;
  }

  // Trailing elif/else branches of an unsupported `if` join its body.
  void skip_branches(SourceStmt& bad) {
    while (at_name("elif") || at_name("else")) {
      SourceStmt branch = skip_unsupported("branch of an unsupported if");
      for (auto& s : branch.body) bad.body.push_back(std::move(s));
    }
  }

  void def_header(SourceStmt& st) {
    if (peek().kind != Tok::Name || is_keyword(peek().text)) {
      throw Unsupported{"malformed def header"};
    }
    st.name = advance().text;
    expect_op("(", "def header");
    while (!at_op(")")) {
      if (peek().kind != Tok::Name || is_keyword(peek().text)) {
        throw Unsupported{"parameter form outside the subset"};
      }
      st.params.push_back(advance().text);
      if (at_op("=")) throw Unsupported{"default parameter value"};
      if (at_op(":")) throw Unsupported{"parameter annotation"};
      if (at_op(",")) {
        advance();
      } else if (!at_op(")")) {
        throw Unsupported{"malformed def header"};
      }
    }
    advance();
    if (at_op("->")) throw Unsupported{"return annotation"};
  }

  void simple_line(std::vector<SourceStmt>& out) {
    for (;;) {
      out.push_back(simple_guarded());
      if (at_op(";")) {
        advance();
        if (peek().kind == Tok::Newline || peek().kind == Tok::End) break;
        continue;
      }
      break;
    }
    if (peek().kind == Tok::Newline) advance();
  }

  SourceStmt simple_guarded() {
    const std::size_t save = pos_;
    try {
      SourceStmt st = simple();
      if (!at_end_of_simple()) throw Unsupported{trailing_reason()};
      return st;
    } catch (const Unsupported& u) {
      pos_ = save;
      SourceStmt st;
      st.kind = StmtKind::Unsupported;
      st.loc = loc(peek());
      st.reason = u.reason;
      bool colon = false;
      while (!at_end_of_simple()) {
        colon = at_op(":");
        advance();
      }
      if (colon && peek().kind == Tok::Newline &&
          peek(1).kind == Tok::Indent) {
        advance();
        st.body = block();
      }
      return st;
    }
  }

  std::string trailing_reason() const {
    if (at_name("if")) return "conditional expression";
    if (at_name("for")) return "comprehension";
    if (at_op(",")) return "tuple";
    return "statement form outside the subset";
  }

  SourceStmt simple() {
    SourceStmt st;
    st.loc = loc(peek());
    const Token& t = peek();
    if (t.kind == Tok::Name && t.text == "return") {
      advance();
      st.kind = StmtKind::Return;
      if (!at_end_of_simple()) st.operands.push_back(test());
      return st;
    }
    if (t.kind == Tok::Name && is_keyword(t.text)) {
      throw Unsupported{t.text + " statement"};
    }
    Expr first = test();
    if (at_op(",")) throw Unsupported{"tuple"};
    if (at_op("=")) {
      advance();
      if (first.kind != ExprKind::Name && first.kind != ExprKind::Index) {
        throw Unsupported{"assignment target outside the subset"};
      }
      Expr value = test();
      if (at_op("=")) throw Unsupported{"chained assignment"};
      if (at_op(",")) throw Unsupported{"tuple"};
      if (value.kind == ExprKind::Call && value.text == "input") {
        st.kind = StmtKind::IORead;
      } else {
        st.kind = StmtKind::Assign;
      }
      st.operands = {std::move(first), std::move(value)};
      return st;
    }
    if (peek().kind == Tok::Op && peek().text.size() >= 2 &&
        peek().text.back() == '=' && peek().text != "==" &&
        peek().text != "!=" && peek().text != "<=" && peek().text != ">=") {
      const std::string aug = peek().text;
      if (std::find(kAugOps.begin(), kAugOps.end(), aug) == kAugOps.end()) {
        throw Unsupported{"augmented operator " + aug};
      }
      advance();
      if (first.kind != ExprKind::Name && first.kind != ExprKind::Index) {
        throw Unsupported{"assignment target outside the subset"};
      }
      st.kind = StmtKind::AugAssign;
      st.op = aug.substr(0, aug.size() - 1);
      st.operands = {std::move(first), test()};
      return st;
    }
    if (at_op(":")) throw Unsupported{"annotated assignment"};
    if (first.kind != ExprKind::Call) throw Unsupported{"bare expression"};
    if (first.text == "print") {
      st.kind = StmtKind::IOPrint;
    } else if (first.text == "input") {
      st.kind = StmtKind::IORead;
    } else {
      st.kind = StmtKind::ExprCall;
    }
    st.operands.push_back(std::move(first));
    return st;
  }

  // --- expressions ---

  Expr test() {
    if (at_name("lambda")) throw Unsupported{"lambda"};
    Expr e = or_test();
    if (at_name("if")) throw Unsupported{"conditional expression"};
    if (at_op(":=")) throw Unsupported{"assignment expression"};
    return e;
  }

  Expr or_test() {
    std::vector<Expr> args{and_test()};
    while (at_name("or")) {
      advance();
      args.push_back(and_test());
    }
    if (args.size() == 1) return std::move(args[0]);
    return Expr::boolop("or", std::move(args));
  }

  Expr and_test() {
    std::vector<Expr> args{not_test()};
    while (at_name("and")) {
      advance();
      args.push_back(not_test());
    }
    if (args.size() == 1) return std::move(args[0]);
    return Expr::boolop("and", std::move(args));
  }

  Expr not_test() {
    if (at_name("not")) {
      advance();
      return Expr::boolop("not", {not_test()});
    }
    return comparison();
  }

  bool at_compare() const {
    if (peek().kind == Tok::Op) {
      return std::find(kCompareOps.begin(), kCompareOps.end(), peek().text) !=
             kCompareOps.end();
    }
    return false;
  }

  void reject_membership() const {
    if (at_name("in") || (at_name("not") && at_name("in", 1))) {
      throw Unsupported{"membership test"};
    }
    if (at_name("is")) throw Unsupported{"identity test"};
  }

  Expr comparison() {
    Expr left = arith();
    reject_membership();
    if (!at_compare()) return left;
    const std::string op = advance().text;
    Expr right = arith();
    reject_membership();
    if (at_compare()) throw Unsupported{"chained comparison"};
    return Expr::compare(op, std::move(left), std::move(right));
  }

  Expr arith() {
    Expr e = term();
    while (at_op("+") || at_op("-")) {
      const std::string op = advance().text;
      e = Expr::binop(op, std::move(e), term());
    }
    if (at_op("<<") || at_op(">>") || at_op("&") || at_op("|") || at_op("^")) {
      throw Unsupported{"bitwise operator"};
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    for (;;) {
      if (at_op("//")) throw Unsupported{"floor division"};
      if (at_op("@")) throw Unsupported{"matrix multiplication"};
      if (!(at_op("*") || at_op("/") || at_op("%"))) return e;
      const std::string op = advance().text;
      e = Expr::binop(op, std::move(e), factor());
    }
  }

  Expr factor() {
    if (at_op("-")) {
      // Only a negative numeric literal is in the subset.
      if (peek(1).kind == Tok::Number && !at_op("**", 2) && !at_op("[", 2) &&
          !at_op("(", 2) && !at_op(".", 2)) {
        advance();
        return Expr::number("-" + advance().text);
      }
      throw Unsupported{"unary minus"};
    }
    if (at_op("+") || at_op("~")) throw Unsupported{"unary " + peek().text};
    return power();
  }

  Expr power() {
    Expr e = atom_expr();
    if (at_op("**")) {
      advance();
      return Expr::binop("**", std::move(e), factor());
    }
    return e;
  }

  Expr atom_expr() {
    if (at_name("await")) throw Unsupported{"await"};
    Expr e = atom();
    bool plain_name = e.kind == ExprKind::Name;
    for (;;) {
      if (at_op("(")) {
        if (!plain_name) throw Unsupported{"call of a computed function"};
        advance();
        e = Expr::call(e.text, call_args());
      } else if (at_op("[")) {
        advance();
        Expr sub = subscript();
        e = Expr::index(std::move(e), std::move(sub));
      } else if (at_op(".")) {
        throw Unsupported{"attribute access"};
      } else {
        return e;
      }
      plain_name = false;
    }
  }

  std::vector<Expr> call_args() {
    std::vector<Expr> args;
    while (!at_op(")")) {
      if (at_op("*") || at_op("**")) throw Unsupported{"star argument"};
      args.push_back(test());
      if (at_op("=")) throw Unsupported{"keyword argument"};
      if (at_name("for")) throw Unsupported{"generator expression"};
      if (at_op(",")) {
        advance();
      } else if (!at_op(")")) {
        throw Unsupported{"malformed call"};
      }
    }
    advance();
    return args;
  }

  Expr subscript() {
    if (at_op(":")) throw Unsupported{"slice"};
    Expr sub = test();
    if (at_op(":")) throw Unsupported{"slice"};
    if (at_op(",")) throw Unsupported{"tuple subscript"};
    expect_op("]", "subscript");
    return sub;
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Name:
        if (is_keyword(t.text)) throw Unsupported{"unexpected '" + t.text + "'"};
        return Expr::name(advance().text);
      case Tok::Number:
        return Expr::number(advance().text);
      case Tok::String: {
        if (t.prefix.find('f') != std::string::npos) {
          throw Unsupported{"formatted string"};
        }
        if (t.prefix.find('b') != std::string::npos) {
          throw Unsupported{"bytes literal"};
        }
        Expr e = Expr::string(advance().text);
        if (peek().kind == Tok::String) {
          throw Unsupported{"implicit string concatenation"};
        }
        return e;
      }
      case Tok::Op:
        if (t.text == "(") return parenthesized();
        if (t.text == "[") return list_display();
        if (t.text == "{") return dict_display();
        throw Unsupported{"unexpected '" + t.text + "'"};
      default:
        throw Unsupported{"incomplete expression"};
    }
  }

  Expr parenthesized() {
    advance();
    if (at_op(")")) throw Unsupported{"tuple"};
    if (at_name("yield")) throw Unsupported{"yield expression"};
    Expr e = test();
    if (at_op(",")) throw Unsupported{"tuple"};
    if (at_name("for")) throw Unsupported{"generator expression"};
    expect_op(")", "parenthesized expression");
    return e;
  }

  Expr list_display() {
    advance();
    std::vector<Expr> items;
    while (!at_op("]")) {
      if (at_op("*")) throw Unsupported{"star expression"};
      items.push_back(test());
      if (at_name("for")) throw Unsupported{"list comprehension"};
      if (at_op(",")) {
        advance();
      } else if (!at_op("]")) {
        throw Unsupported{"malformed list"};
      }
    }
    advance();
    return Expr::list(std::move(items));
  }

  Expr dict_display() {
    advance();
    std::vector<Expr> items;
    while (!at_op("}")) {
      if (at_op("**")) throw Unsupported{"dictionary unpacking"};
      items.push_back(test());
      if (at_name("for")) throw Unsupported{"set comprehension"};
      if (!at_op(":")) throw Unsupported{"set display"};
      advance();
      items.push_back(test());
      if (at_name("for")) throw Unsupported{"dictionary comprehension"};
      if (at_op(",")) {
        advance();
      } else if (!at_op("}")) {
        throw Unsupported{"malformed dictionary"};
      }
    }
    advance();
    return Expr::dict(std::move(items));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<SourceStmt> parse_source(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.file();
}

}  // namespace ccgc
