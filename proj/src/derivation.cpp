#include "ccgcomment/derivation.hpp"

#include "ccgcomment/error.hpp"

namespace ccgc {

const char* to_string(Rule r) {
  switch (r) {
    case Rule::Lex:
      return "Lex";
    case Rule::FwdApp:
      return "FwdApp";
    case Rule::BwdApp:
      return "BwdApp";
    case Rule::FwdComp:
      return "FwdComp";
    case Rule::BwdComp:
      return "BwdComp";
  }
  return "?";
}

DerivationPtr make_leaf(std::size_t position, const LexEntry& entry) {
  return std::make_shared<const Derivation>(Derivation{
      position, position + 1, entry.cat, entry.sem, Rule::Lex, entry.word, {}});
}

namespace {

std::string fresh_name(const Term& a, const Term& b) {
  const auto fa = free_variables(a);
  const auto fb = free_variables(b);
  std::string name = "z";
  while (fa.count(name) != 0 || fb.count(name) != 0) name += '\'';
  return name;
}

/// \z. outer (inner z)
Term compose(const Term& outer, const Term& inner) {
  const std::string z = fresh_name(outer, inner);
  return abs(z, app(outer, app(inner, var(z))));
}

bool normalized(const Term& t, Term& out) {
  try {
    out = beta_normalize(t, normalization_fuel(t));
    return true;
  } catch (const FuelExhausted&) {
    return false;
  }
}

}  // namespace

std::vector<Combination> combine(const Category& lc, const Term& ls,
                                 const Category& rc, const Term& rs) {
  std::vector<Combination> out;
  Term sem = ls;
  if (lc.kind() == CatKind::Forward && unifies(lc.arg(), rc) &&
      normalized(app(ls, rs), sem)) {
    out.push_back({Rule::FwdApp, lc.result(), sem});
  }
  if (rc.kind() == CatKind::Backward && unifies(rc.arg(), lc) &&
      normalized(app(rs, ls), sem)) {
    out.push_back({Rule::BwdApp, rc.result(), sem});
  }
  if (lc.kind() == CatKind::Forward && rc.kind() == CatKind::Forward &&
      unifies(lc.arg(), rc.result()) && normalized(compose(ls, rs), sem)) {
    out.push_back(
        {Rule::FwdComp, Category::forward(lc.result(), rc.arg()), sem});
  }
  if (lc.kind() == CatKind::Backward && rc.kind() == CatKind::Backward &&
      unifies(rc.arg(), lc.result()) && normalized(compose(rs, ls), sem)) {
    out.push_back(
        {Rule::BwdComp, Category::backward(rc.result(), lc.arg()), sem});
  }
  return out;
}

namespace {

bool fail(std::string* why, const std::string& message) {
  if (why != nullptr) *why = message;
  return false;
}

bool same_sem(const Term& actual, const Term& unreduced) {
  try {
    return is_beta_normal(actual) &&
           equivalent(actual, beta_normalize(unreduced, 100 * size(unreduced)));
  } catch (const FuelExhausted&) {
    return false;
  }
}

}  // namespace

bool validate_derivation(const Derivation& d, const Lexicon& lex,
                         std::string* why) {
  const std::string where = " at [" + std::to_string(d.begin) + "," +
                            std::to_string(d.end) + ")";
  if (d.rule == Rule::Lex) {
    if (!d.children.empty()) return fail(why, "leaf with children" + where);
    if (d.end != d.begin + 1) return fail(why, "leaf spans != 1 token" + where);
    for (const LexEntry& e : lex.lookup(d.word)) {
      if (e.cat == d.cat && equivalent(e.sem, d.sem)) return true;
    }
    return fail(why, "no lexicon entry for '" + d.word + "' with category " +
                         to_string(d.cat) + where);
  }

  if (d.children.size() != 2) return fail(why, "binary node arity" + where);
  const Derivation& l = *d.children[0];
  const Derivation& r = *d.children[1];
  if (l.begin != d.begin || l.end != r.begin || r.end != d.end ||
      l.begin >= l.end || r.begin >= r.end) {
    return fail(why, "children spans not contiguous" + where);
  }
  if (!validate_derivation(l, lex, why) || !validate_derivation(r, lex, why)) {
    return false;
  }

  switch (d.rule) {
    case Rule::FwdApp:
      // X/Y  Y  =>  X
      if (l.cat.kind() != CatKind::Forward || !unifies(l.cat.arg(), r.cat) ||
          !(d.cat == l.cat.result())) {
        return fail(why, "FwdApp categories" + where);
      }
      if (!same_sem(d.sem, app(l.sem, r.sem))) {
        return fail(why, "FwdApp semantics" + where);
      }
      return true;
    case Rule::BwdApp:
      // Y  X\Y  =>  X
      if (r.cat.kind() != CatKind::Backward || !unifies(r.cat.arg(), l.cat) ||
          !(d.cat == r.cat.result())) {
        return fail(why, "BwdApp categories" + where);
      }
      if (!same_sem(d.sem, app(r.sem, l.sem))) {
        return fail(why, "BwdApp semantics" + where);
      }
      return true;
    case Rule::FwdComp: {
      // X/Y  Y/Z  =>  X/Z
      if (l.cat.kind() != CatKind::Forward ||
          r.cat.kind() != CatKind::Forward ||
          !unifies(l.cat.arg(), r.cat.result()) ||
          !(d.cat == Category::forward(l.cat.result(), r.cat.arg()))) {
        return fail(why, "FwdComp categories" + where);
      }
      if (!d.sem.is(TermKind::Abs)) return fail(why, "FwdComp semantics" + where);
      // Apply both sides to the result's parameter and compare the bodies.
      const Term probe = var(d.sem.name());
      if (!same_sem(d.sem.body(), app(l.sem, app(r.sem, probe)))) {
        return fail(why, "FwdComp semantics" + where);
      }
      return true;
    }
    case Rule::BwdComp: {
      // Y\Z  X\Y  =>  X\Z
      if (l.cat.kind() != CatKind::Backward ||
          r.cat.kind() != CatKind::Backward ||
          !unifies(r.cat.arg(), l.cat.result()) ||
          !(d.cat == Category::backward(r.cat.result(), l.cat.arg()))) {
        return fail(why, "BwdComp categories" + where);
      }
      if (!d.sem.is(TermKind::Abs)) return fail(why, "BwdComp semantics" + where);
      const Term probe = var(d.sem.name());
      if (!same_sem(d.sem.body(), app(r.sem, app(l.sem, probe)))) {
        return fail(why, "BwdComp semantics" + where);
      }
      return true;
    }
    case Rule::Lex:
      break;
  }
  return fail(why, "unknown rule" + where);
}

std::vector<std::string> leaves(const Derivation& d) {
  if (d.rule == Rule::Lex) return {d.word};
  std::vector<std::string> out;
  for (const auto& c : d.children) {
    auto part = leaves(*c);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

void format_node(const Derivation& d, std::size_t depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += to_string(d.rule);
  if (d.rule == Rule::Lex) out += " \"" + d.word + "\"";
  out += ' ';
  out += to_string(d.cat);
  out += " : ";
  out += to_string(d.sem);
  out += '\n';
  for (const auto& c : d.children) format_node(*c, depth + 1, out);
}

}  // namespace

std::string format_tree(const Derivation& d) {
  std::string out;
  format_node(d, 0, out);
  return out;
}

}  // namespace ccgc
