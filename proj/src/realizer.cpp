#include "ccgcomment/realizer.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ccgcomment/error.hpp"

namespace ccgc {

// ---------------------------------------------------------------------------
// Goal

Goal::Goal(std::vector<Term> predicates) : predicates_(std::move(predicates)) {
  if (predicates_.empty()) throw std::invalid_argument("empty goal");
  for (const auto& p : predicates_) {
    if (!p.is(TermKind::Pred) || !is_ground(p)) {
      throw std::invalid_argument("goal element is not a ground predicate: " +
                                  to_string(p));
    }
  }
}

std::vector<std::string> Goal::printed() const {
  std::vector<std::string> out;
  out.reserve(predicates_.size());
  for (const auto& p : predicates_) out.push_back(to_string(p));
  return out;
}

bool operator==(const Goal& a, const Goal& b) {
  auto keys = [](const Goal& g) {
    std::vector<std::string> k;
    for (const auto& p : g.predicates_) k.push_back(canonical_key(p));
    std::sort(k.begin(), k.end());
    return k;
  };
  return keys(a) == keys(b);
}

// ---------------------------------------------------------------------------
// Symbols

namespace {

void count_units(const Term& t, std::map<std::string, unsigned>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      break;
    case TermKind::Const:
      ++out["C:" + t.name()];
      break;
    case TermKind::Pred:
      ++out["P:" + t.name()];
      for (const auto& a : t.args()) count_units(a, out);
      break;
    case TermKind::Abs:
      count_units(t.body(), out);
      break;
    case TermKind::App:
    case TermKind::Conj:
      count_units(t.left(), out);
      count_units(t.right(), out);
      break;
  }
}

}  // namespace

std::map<std::string, unsigned> symbol_units(const Term& t) {
  std::map<std::string, unsigned> out;
  count_units(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Search

namespace {

using Counts = std::vector<unsigned>;

struct Edge {
  Category cat;
  Term sem;
  std::string cat_text;
  std::string sem_key;
  Counts units;
  unsigned cost;
  unsigned h;
  std::vector<std::string> tokens;
  Rule rule;
  std::size_t left = 0;   // edge indices for binary rules
  std::size_t right = 0;
};

class Search {
 public:
  Search(const Lexicon& lex, const Goal& goal, std::size_t k,
         const SearchLimits& limits, const SearchObserver& observer)
      : lex_(lex),
        goal_term_(goal.as_term()),
        goal_key_(canonical_key(goal.as_term())),
        k_(k),
        limits_(limits),
        observer_(observer),
        agenda_(Order{&edges_}) {
    collect_preds(goal_term_, goal_preds_);
    for (const auto& [name, n] : symbol_units(goal_term_)) {
      index_.emplace(name, names_.size());
      names_.push_back(name);
      goal_units_.push_back(n);
    }
    rates_.assign(names_.size(), std::numeric_limits<double>::infinity());
    word_rates_.assign(names_.size(), std::numeric_limits<double>::infinity());
    for (const LexEntry& e : lex_.entries()) {
      Counts units;
      if (!units_within_goal(e.sem, units)) continue;
      const unsigned total = sum(units);
      if (total > 0) {
        const double rate = static_cast<double>(e.weight) / total;
        for (std::size_t i = 0; i < units.size(); ++i) {
          if (units[i] > 0) {
            rates_[i] = std::min(rates_[i], rate);
            word_rates_[i] = std::min(word_rates_[i], 1.0 / total);
          }
        }
      }
      seeds_.push_back({&e, std::move(units)});
    }
  }

  std::vector<Realization> run() {
    // A goal symbol no admissible entry can produce makes the goal
    // unreachable.
    for (double r : rates_) {
      if (std::isinf(r)) throw NoRealization();
    }
    for (const auto& [entry, units] : seeds_) {
      if (1 + words_needed(units) > limits_.max_words) continue;
      Edge e{entry->cat,  entry->sem, to_string(entry->cat),
             canonical_key(entry->sem), units,   entry->weight,
             heuristic(units), {entry->word},   Rule::Lex};
      push(std::move(e));
    }

    std::size_t expansions = 0;
    bool limit_hit = false;
    while (!agenda_.empty()) {
      const std::size_t idx = agenda_.top();
      const Edge& top = edges_[idx];
      if (results_.size() >= k_ && f(top) > results_[k_ - 1].cost) break;
      agenda_.pop();
      const std::string sig = signature(top);
      if (closed_sigs_.count(sig) != 0) continue;
      if (expansions == limits_.max_expansions) {
        limit_hit = true;
        break;
      }
      ++expansions;
      closed_sigs_.insert(sig);
      close(idx);
      if (observer_) observer_(snapshot(top));
      if (is_complete(top) && seen_tokens_.insert(top.tokens).second) {
        results_.push_back({top.cost, idx});
      }
      expand(idx);
    }

    if (results_.empty()) {
      if (limit_hit) throw LimitExceeded(limits_.max_expansions);
      throw NoRealization();
    }
    std::stable_sort(results_.begin(), results_.end(),
                     [&](const Found& a, const Found& b) {
                       if (a.cost != b.cost) return a.cost < b.cost;
                       return edges_[a.edge].tokens < edges_[b.edge].tokens;
                     });
    if (results_.size() > k_) results_.resize(k_);
    std::vector<Realization> out;
    for (const Found& found : results_) {
      const Edge& e = edges_[found.edge];
      out.push_back({e.tokens, build(found.edge, 0), e.sem, e.cost});
    }
    return out;
  }

 private:
  struct Seed {
    const LexEntry* entry;
    Counts units;
  };
  struct Found {
    unsigned cost;
    std::size_t edge;
  };

  // Min-heap on (f, cost, tokens, category, semantics, index).
  struct Order {
    const std::deque<Edge>* edges;
    bool operator()(std::size_t a, std::size_t b) const {
      const Edge& x = (*edges)[a];
      const Edge& y = (*edges)[b];
      const unsigned fx = x.cost + x.h;
      const unsigned fy = y.cost + y.h;
      if (fx != fy) return fx > fy;
      if (x.cost != y.cost) return x.cost > y.cost;
      if (x.tokens != y.tokens) return x.tokens > y.tokens;
      if (x.cat_text != y.cat_text) return x.cat_text > y.cat_text;
      if (x.sem_key != y.sem_key) return x.sem_key > y.sem_key;
      return a > b;
    }
  };

  static unsigned sum(const Counts& c) {
    unsigned s = 0;
    for (unsigned v : c) s += v;
    return s;
  }

  static unsigned f(const Edge& e) { return e.cost + e.h; }

  bool units_within_goal(const Term& sem, Counts& out) const {
    out.assign(names_.size(), 0);
    for (const auto& [name, n] : symbol_units(sem)) {
      auto it = index_.find(name);
      if (it == index_.end() || n > goal_units_[it->second]) return false;
      out[it->second] = n;
    }
    return true;
  }

  /// Sum over missing symbols of the cheapest per-symbol share of an entry's
  /// weight. Every word carries its symbols into the final semantics exactly
  /// once (lexicon semantics are linear), so this never overestimates.
  unsigned heuristic(const Counts& units) const {
    double total = 0;
    for (std::size_t i = 0; i < units.size(); ++i) {
      total += (goal_units_[i] - units[i]) * rates_[i];
    }
    return static_cast<unsigned>(std::ceil(total - 1e-9));
  }

  /// Lower bound on the number of further words, by the same argument as
  /// `heuristic` with every weight taken as 1.
  std::size_t words_needed(const Counts& units) const {
    double total = 0;
    for (std::size_t i = 0; i < units.size(); ++i) {
      total += (goal_units_[i] - units[i]) * word_rates_[i];
    }
    return static_cast<std::size_t>(std::ceil(total - 1e-9));
  }

  static void collect_preds(const Term& t, std::vector<Term>& out) {
    switch (t.kind()) {
      case TermKind::Pred:
        out.push_back(t);
        for (const auto& a : t.args()) collect_preds(a, out);
        break;
      case TermKind::Abs:
        collect_preds(t.body(), out);
        break;
      case TermKind::App:
      case TermKind::Conj:
        collect_preds(t.left(), out);
        collect_preds(t.right(), out);
        break;
      default:
        break;
    }
  }

  /// `p` can still become `g`: same predicate and arity, equal constants,
  /// matching nested predicates. Other arguments may yet change.
  static bool may_become(const Term& p, const Term& g) {
    if (p.name() != g.name() || p.args().size() != g.args().size()) {
      return false;
    }
    for (std::size_t i = 0; i < p.args().size(); ++i) {
      const Term& a = p.args()[i];
      const Term& b = g.args()[i];
      if (a.is(TermKind::Const)) {
        if (!b.is(TermKind::Const) || a.name() != b.name()) return false;
      } else if (a.is(TermKind::Pred)) {
        if (!b.is(TermKind::Pred) || !may_become(a, b)) return false;
      }
    }
    return true;
  }

  /// Linear semantics never discard or rebuild a predicate node, so every
  /// predicate in a useful constituent must reappear in the goal.
  bool compatible(const Term& sem) const {
    std::vector<Term> preds;
    collect_preds(sem, preds);
    return std::all_of(preds.begin(), preds.end(), [&](const Term& p) {
      return std::any_of(goal_preds_.begin(), goal_preds_.end(),
                         [&](const Term& g) { return may_become(p, g); });
    });
  }

  std::string signature(const Edge& e) const {
    std::string sig = e.cat_text + '|' + e.sem_key + '|' +
                      std::to_string(e.tokens.size());
    if (k_ > 1) {
      for (const auto& t : e.tokens) sig += ' ' + t;
    }
    return sig;
  }

  bool is_complete(const Edge& e) const {
    return e.units == goal_units_ && lex_.is_root(e.cat) &&
           e.sem_key == goal_key_;
  }

  void push(Edge e) {
    if (!compatible(e.sem)) return;
    const std::string sig = signature(e);
    if (closed_sigs_.count(sig) != 0) return;
    auto [it, fresh] = best_pushed_.try_emplace(sig, e.cost, e.tokens);
    if (!fresh) {
      const auto& [cost, tokens] = it->second;
      if (cost < e.cost || (cost == e.cost && tokens <= e.tokens)) return;
      it->second = {e.cost, e.tokens};
    }
    edges_.push_back(std::move(e));
    agenda_.push(edges_.size() - 1);
  }

  void close(std::size_t idx) {
    const Edge& e = edges_[idx];
    by_shape_[shape_key(e.cat)].push_back(idx);
    if (e.cat.kind() == CatKind::Forward) {
      fwd_by_arg_[shape_key(e.cat.arg())].push_back(idx);
      fwd_by_result_[shape_key(e.cat.result())].push_back(idx);
    } else if (e.cat.kind() == CatKind::Backward) {
      bwd_by_arg_[shape_key(e.cat.arg())].push_back(idx);
      bwd_by_result_[shape_key(e.cat.result())].push_back(idx);
    }
  }

  static const std::vector<std::size_t>& bucket(
      const std::unordered_map<std::string, std::vector<std::size_t>>& m,
      const std::string& key) {
    static const std::vector<std::size_t> none;
    auto it = m.find(key);
    return it == m.end() ? none : it->second;
  }

  void expand(std::size_t idx) {
    // Candidate (left, right) pairs; each pair is combined once with every
    // rule.
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    const Category cat = edges_[idx].cat;
    const std::string self = shape_key(cat);
    // As an argument: X/Y to the left, or X\Y to the right.
    for (std::size_t l : bucket(fwd_by_arg_, self)) pairs.emplace(l, idx);
    for (std::size_t r : bucket(bwd_by_arg_, self)) pairs.emplace(idx, r);
    if (cat.kind() == CatKind::Forward) {
      const std::string a = shape_key(cat.arg());
      const std::string res = shape_key(cat.result());
      for (std::size_t r : bucket(by_shape_, a)) pairs.emplace(idx, r);
      for (std::size_t r : bucket(fwd_by_result_, a)) pairs.emplace(idx, r);
      for (std::size_t l : bucket(fwd_by_arg_, res)) pairs.emplace(l, idx);
    } else if (cat.kind() == CatKind::Backward) {
      const std::string a = shape_key(cat.arg());
      const std::string res = shape_key(cat.result());
      for (std::size_t l : bucket(by_shape_, a)) pairs.emplace(l, idx);
      for (std::size_t l : bucket(bwd_by_result_, a)) pairs.emplace(l, idx);
      for (std::size_t r : bucket(bwd_by_arg_, res)) pairs.emplace(idx, r);
    }

    for (const auto& [li, ri] : pairs) {
      const Edge& l = edges_[li];
      const Edge& r = edges_[ri];
      if (l.tokens.size() + r.tokens.size() > limits_.max_words) continue;
      Counts units(names_.size());
      bool fits = true;
      for (std::size_t i = 0; i < units.size(); ++i) {
        units[i] = l.units[i] + r.units[i];
        if (units[i] > goal_units_[i]) fits = false;
      }
      if (!fits) continue;
      if (l.tokens.size() + r.tokens.size() + words_needed(units) >
          limits_.max_words) {
        continue;
      }
      std::vector<std::string> tokens = l.tokens;
      tokens.insert(tokens.end(), r.tokens.begin(), r.tokens.end());
      const unsigned cost = l.cost + r.cost;
      for (auto& c : combine(l.cat, l.sem, r.cat, r.sem)) {
        Edge e{c.cat,  c.sem,           to_string(c.cat), canonical_key(c.sem),
               units,  cost,            heuristic(units), tokens,
               c.rule, li,              ri};
        push(std::move(e));
      }
    }
  }

  ExpandedState snapshot(const Edge& e) const {
    ExpandedState s{e.cost, e.h, e.tokens, {}};
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (goal_units_[i] > e.units[i]) {
        s.uncovered[names_[i]] = goal_units_[i] - e.units[i];
      }
    }
    return s;
  }

  DerivationPtr build(std::size_t idx, std::size_t offset) const {
    const Edge& e = edges_[idx];
    if (e.rule == Rule::Lex) {
      return std::make_shared<const Derivation>(Derivation{
          offset, offset + 1, e.cat, e.sem, Rule::Lex, e.tokens.front(), {}});
    }
    auto l = build(e.left, offset);
    auto r = build(e.right, offset + edges_[e.left].tokens.size());
    return std::make_shared<const Derivation>(
        Derivation{offset, offset + e.tokens.size(), e.cat, e.sem, e.rule,
                   {}, {std::move(l), std::move(r)}});
  }

  const Lexicon& lex_;
  Term goal_term_;
  std::vector<Term> goal_preds_;
  std::string goal_key_;
  std::size_t k_;
  SearchLimits limits_;
  const SearchObserver& observer_;

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  Counts goal_units_;
  std::vector<double> rates_;
  std::vector<double> word_rates_;
  std::vector<Seed> seeds_;

  std::deque<Edge> edges_;
  std::priority_queue<std::size_t, std::vector<std::size_t>, Order> agenda_;
  std::unordered_set<std::string> closed_sigs_;
  std::unordered_map<std::string, std::pair<unsigned, std::vector<std::string>>>
      best_pushed_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_shape_,
      fwd_by_arg_, fwd_by_result_, bwd_by_arg_, bwd_by_result_;

  std::set<std::vector<std::string>> seen_tokens_;
  std::vector<Found> results_;
};

}  // namespace

std::vector<Realization> realize_all(const Lexicon& lex, const Goal& goal,
                                     std::size_t k, const SearchLimits& limits,
                                     const SearchObserver& observer) {
  if (k == 0) throw std::invalid_argument("realize_all needs k >= 1");
  if (limits.max_words == 0 || limits.max_expansions == 0) {
    throw std::invalid_argument("search limits must be positive");
  }
  return Search(lex, goal, k, limits, observer).run();
}

Realization realize(const Lexicon& lex, const Goal& goal,
                    const SearchLimits& limits,
                    const SearchObserver& observer) {
  return realize_all(lex, goal, 1, limits, observer).front();
}

}  // namespace ccgc
