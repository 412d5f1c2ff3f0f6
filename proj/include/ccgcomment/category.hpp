#pragma once

// CCG syntactic categories. `A/B` seeks a B to its right, `A\B` a B to its
// left; the result is always written on the left. Atoms may carry a single
// feature tag, `S[imp]`, which unifies with an equal tag or with an atom of
// the same name that has none.

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace ccgc {

enum class CatKind { Atom, Forward, Backward };

class Category {
 public:
  CatKind kind() const { return node_->kind; }
  bool is_atom() const { return node_->kind == CatKind::Atom; }
  bool is_functor() const { return node_->kind != CatKind::Atom; }

  const std::string& name() const { return node_->name; }  // Atom
  const std::optional<std::string>& feature() const { return node_->feature; }
  const Category& result() const { return *node_->result; }  // functors
  const Category& arg() const { return *node_->arg; }        // functors

  friend bool operator==(const Category& a, const Category& b);

  static Category atom(std::string name,
                       std::optional<std::string> feature = std::nullopt);
  static Category forward(Category result, Category arg);
  static Category backward(Category result, Category arg);

 private:
  struct Node {
    CatKind kind;
    std::string name;
    std::optional<std::string> feature;
    std::shared_ptr<const Category> result;
    std::shared_ptr<const Category> arg;
  };
  explicit Category(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Conventional notation with parentheses around complex sub-categories,
/// e.g. `(S\NP)/NP`.
std::string to_string(const Category& c);

/// Cat := Atom | Atom "[" feat "]" | Cat "/" Cat | Cat "\" Cat | "(" Cat ")"
/// with left-associative slashes. Throws SyntaxError carrying the offset.
Category parse_category(std::string_view text);

/// Same shape and atom names; features equal or absent on at least one side.
bool unifies(const Category& a, const Category& b);

/// Rendering with every feature dropped; categories that unify share a key.
std::string shape_key(const Category& c);

}  // namespace ccgc
