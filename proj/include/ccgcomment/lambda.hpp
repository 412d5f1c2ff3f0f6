#pragma once

// Lambda-calculus terms used for word semantics and logical forms.
//
// Terms are immutable and shared; copying a Term is a reference-count bump.
// The textual syntax is
//
//   term := '\' ident '.' term | conj
//   conj := app ('&' app)*              (left-associative)
//   app  := atom atom*                  (juxtaposition, left-associative)
//   atom := ident '(' [term (',' term)*] ')'    predicate, no space before '('
//         | ident                       variable if bound, constant otherwise
//         | '(' term ')'
//
// The printer emits the minimal parentheses this grammar needs, with single
// spaces: `\x. sort'(x)`, `iterate() & element() & list(a)`, `(\x. x) y`.

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ccgc {

enum class TermKind { Var, Const, Pred, Abs, App, Conj };

class Term {
 public:
  TermKind kind() const { return node_->kind; }

  /// Name of a Var, Const or Pred, or the parameter of an Abs.
  const std::string& name() const { return node_->name; }

  /// Predicate arguments.
  const std::vector<Term>& args() const { return node_->kids; }

  const Term& body() const { return node_->kids[0]; }   // Abs
  const Term& fn() const { return node_->kids[0]; }     // App
  const Term& arg() const { return node_->kids[1]; }    // App
  const Term& left() const { return node_->kids[0]; }   // Conj
  const Term& right() const { return node_->kids[1]; }  // Conj

  bool is(TermKind k) const { return node_->kind == k; }

  /// Structural identity (names of bound variables matter). Use
  /// `equivalent` for alpha/conjunction-insensitive comparison.
  friend bool operator==(const Term& a, const Term& b);

  static Term make(TermKind kind, std::string name, std::vector<Term> kids);

 private:
  struct Node {
    TermKind kind;
    std::string name;
    std::vector<Term> kids;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Term var(std::string name);
Term constant(std::string name);
Term pred(std::string name, std::vector<Term> args = {});
Term abs(std::string param, Term body);
Term app(Term fn, Term arg);
Term conj(Term left, Term right);
/// Left-nested conjunction of one or more terms.
Term conj_all(const std::vector<Term>& terms);

std::string to_string(const Term& t);
Term parse_term(std::string_view text);

std::size_t size(const Term& t);
std::set<std::string> free_variables(const Term& t);
bool is_closed(const Term& t);
/// No Var and no Abs anywhere.
bool is_ground(const Term& t);
bool is_beta_normal(const Term& t);
/// Every abstraction uses its parameter exactly once in its body.
bool is_linear(const Term& t);
/// The identity abstraction `\x. x`.
bool is_identity(const Term& t);

/// Conjuncts of a (possibly nested) conjunction, left to right.
std::vector<Term> flatten_conj(const Term& t);

/// Capture-avoiding substitution of `value` for the free occurrences of
/// `var_name`. Binders that would capture a free variable of `value` are
/// renamed by appending primes.
Term substitute(const Term& term, const std::string& var_name,
                const Term& value);

/// One leftmost-outermost beta step, or nullopt if `t` is normal.
std::optional<Term> reduce_step(const Term& t);

/// Leftmost-outermost normalization. Throws FuelExhausted when the normal
/// form is not reached within `fuel` steps; std::invalid_argument on fuel 0.
Term beta_normalize(const Term& t, std::size_t fuel);

/// Alpha-equivalence with conjunction compared as a multiset of conjuncts.
bool equivalent(const Term& a, const Term& b);

/// A string that is equal for two terms iff they are `equivalent`.
std::string canonical_key(const Term& t);

}  // namespace ccgc
