#include "ccgcomment/category.hpp"

#include <cctype>

#include "ccgcomment/error.hpp"

namespace ccgc {

Category Category::atom(std::string name, std::optional<std::string> feature) {
  return Category(std::make_shared<const Node>(
      Node{CatKind::Atom, std::move(name), std::move(feature), nullptr,
           nullptr}));
}

Category Category::forward(Category result, Category arg) {
  return Category(std::make_shared<const Node>(
      Node{CatKind::Forward, {}, std::nullopt,
           std::make_shared<const Category>(std::move(result)),
           std::make_shared<const Category>(std::move(arg))}));
}

Category Category::backward(Category result, Category arg) {
  return Category(std::make_shared<const Node>(
      Node{CatKind::Backward, {}, std::nullopt,
           std::make_shared<const Category>(std::move(result)),
           std::make_shared<const Category>(std::move(arg))}));
}

bool operator==(const Category& a, const Category& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_atom()) return a.name() == b.name() && a.feature() == b.feature();
  return a.result() == b.result() && a.arg() == b.arg();
}

namespace {

void render(const Category& c, bool features, bool nested, std::string& out) {
  if (c.is_atom()) {
    out += c.name();
    if (features && c.feature()) {
      out += '[';
      out += *c.feature();
      out += ']';
    }
    return;
  }
  if (nested) out += '(';
  render(c.result(), features, true, out);
  out += c.kind() == CatKind::Forward ? '/' : '\\';
  render(c.arg(), features, true, out);
  if (nested) out += ')';
}

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

class CategoryParser {
 public:
  explicit CategoryParser(std::string_view text) : s_(text) {}

  Category parse() {
    Category c = slashes();
    skip_space();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, 0, i_);
  }

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      ++i_;
    }
  }

  Category slashes() {
    Category left = primary();
    for (;;) {
      skip_space();
      if (i_ < s_.size() && (s_[i_] == '/' || s_[i_] == '\\')) {
        const bool fwd = s_[i_] == '/';
        ++i_;
        Category right = primary();
        left = fwd ? Category::forward(left, right)
                   : Category::backward(left, right);
      } else {
        return left;
      }
    }
  }

  Category primary() {
    skip_space();
    if (i_ >= s_.size()) fail("expected a category");
    if (s_[i_] == '(') {
      ++i_;
      Category c = slashes();
      skip_space();
      if (i_ >= s_.size() || s_[i_] != ')') fail("expected ')'");
      ++i_;
      return c;
    }
    if (std::isalpha(static_cast<unsigned char>(s_[i_])) == 0) {
      fail("expected an atomic category");
    }
    const std::size_t start = i_;
    while (i_ < s_.size() && word_char(s_[i_])) ++i_;
    std::string name(s_.substr(start, i_ - start));
    std::optional<std::string> feature;
    if (i_ < s_.size() && s_[i_] == '[') {
      ++i_;
      const std::size_t fstart = i_;
      while (i_ < s_.size() && word_char(s_[i_])) ++i_;
      if (i_ == fstart) fail("expected a feature");
      if (i_ >= s_.size() || s_[i_] != ']') fail("expected ']'");
      feature = std::string(s_.substr(fstart, i_ - fstart));
      ++i_;
    }
    return Category::atom(std::move(name), std::move(feature));
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

std::string to_string(const Category& c) {
  std::string out;
  render(c, true, false, out);
  return out;
}

std::string shape_key(const Category& c) {
  std::string out;
  render(c, false, false, out);
  return out;
}

Category parse_category(std::string_view text) {
  return CategoryParser(text).parse();
}

bool unifies(const Category& a, const Category& b) {
  if (a.kind() != b.kind()) return false;
  if (a.is_atom()) {
    if (a.name() != b.name()) return false;
    return !a.feature() || !b.feature() || *a.feature() == *b.feature();
  }
  return unifies(a.result(), b.result()) && unifies(a.arg(), b.arg());
}

}  // namespace ccgc
