#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "ccgcomment/extractor.hpp"
#include "ccgcomment/frontend.hpp"

using namespace ccgc;
namespace fs = std::filesystem;

namespace {

Goal G(std::initializer_list<const char*> preds) {
  std::vector<Term> ts;
  for (const char* p : preds) ts.push_back(parse_term(p));
  return Goal(std::move(ts));
}

std::vector<AnnotatedStmt> run(const char* text) { return extract(parse_source(text)); }

std::string show(const std::optional<Goal>& g) {
  if (!g) return "<none>";
  std::string out;
  for (const auto& p : g->printed()) out += p + "; ";
  return out;
}

// Every name and literal spelled in an expression.
void spelled(const Expr& e, std::set<std::string>& out) {
  if (e.kind == ExprKind::Name || e.kind == ExprKind::NumLit || e.kind == ExprKind::Call) {
    out.insert(e.text);
  }
  for (const auto& i : e.items) spelled(i, out);
}

void constants(const Term& t, std::set<std::string>& out) {
  if (t.is(TermKind::Const)) out.insert(t.name());
  if (t.is(TermKind::Pred)) {
    for (const auto& a : t.args()) constants(a, out);
  }
  if (t.is(TermKind::Conj)) {
    constants(t.left(), out);
    constants(t.right(), out);
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Extract, TableRows) {
  EXPECT_EQ(run("if x != y:\n    pass\n")[0].goal, G({"condition()", "inequality(x, y)"}));
  EXPECT_EQ(run("a = [1, 2]\nfor e in a:\n    pass\n")[1].goal,
            G({"iterate()", "element()", "list(a)"}));
  EXPECT_EQ(run("a = {1: 2}\nfor e in a:\n    pass\n")[1].goal,
            G({"iterate()", "keys()", "dictionary(a)"}));
}

TEST(Extract, AssignmentOfALiteralIsExactlyOnePredicate) {
  const auto out = run("x = 5");
  ASSERT_EQ(out.size(), 1u);
  ASSERT_TRUE(out[0].goal);
  ASSERT_EQ(out[0].goal->predicates().size(), 1u);
  EXPECT_EQ(to_string(out[0].goal->predicates()[0]), "assign(x, 5)");
}

TEST(Extract, StatementTable) {
  const std::vector<std::pair<const char*, Goal>> rows{
      {"x += 1", G({"increase(x, 1)"})},
      {"x -= y", G({"decrease(x, y)"})},
      {"x *= 2", G({"multiply(x, 2)"})},
      {"x /= 2", G({"divide(x, 2)"})},
      {"x %= 2", G({"assign(x, remainder(x, 2))"})},
      {"x **= 2", G({"assign(x, power(x, 2))"})},
      {"while i < n:\n    pass", G({"loop()", "while()", "less(i, n)"})},
      {"for i in range(10):\n    pass", G({"iterate()", "counter(i)", "upper(10)"})},
      {"for i in range(1, n):\n    pass", G({"iterate()", "counter(i)", "lower(1)", "upper(n)"})},
      {"for i in range(0, 10, 2):\n    pass",
       G({"iterate()", "counter(i)", "lower(0)", "upper(10)", "step(2)"})},
      {"for e in [1, 2]:\n    pass",
       G({"iterate()", "element()", "collection(new_list())"})},
      {"for e in xs:\n    pass", G({"iterate()", "element()", "collection(xs)"})},
      {"s = \"ab\"\nfor c in s:\n    pass", G({"iterate()", "character()", "string(s)"})},
      {"def f(a, b):\n    pass", G({"define()", "function(f)", "parameters(a, b)"})},
      {"return x + 1", G({"return()", "value(plus(x, 1))"})},
      {"return", G({"return()"})},
      {"f(x, 2)", G({"call()", "function(f)", "arguments(x, 2)"})},
      {"print(x)", G({"output()", "value(x)"})},
      {"print()", G({"output()"})},
      {"n = input()", G({"input()", "target(n)"})},
      {"input(\"?\")", G({"input()"})},
  };
  for (const auto& [text, goal] : rows) {
    // The statement of interest is the last supported one.
    const auto out = run(text);
    auto it = std::find_if(out.rbegin(), out.rend(), [](const AnnotatedStmt& a) {
      return a.stmt.kind != StmtKind::Unsupported;
    });
    ASSERT_NE(it, out.rend()) << text;
    EXPECT_EQ(it->goal, goal) << text << " gave " << show(it->goal);
  }
}

TEST(Render, Expressions) {
  const auto value = [](const char* src) {
    return to_string(render(parse_source(std::string("v = ") + src)[0].operands[1]));
  };
  EXPECT_EQ(value("i + 1"), "plus(i, 1)");
  EXPECT_EQ(value("a[i - 1]"), "item(a, minus(i, 1))");
  EXPECT_EQ(value("x * y / 2 % 3 ** k"), "remainder(quotient(times(x, y), 2), power(3, k))");
  EXPECT_EQ(value("f(a, 0.5)"), "result(f, a, 0.5)");
  EXPECT_EQ(value("\"hi\""), "text()");
  EXPECT_EQ(value("[]"), "empty_list()");
  EXPECT_EQ(value("{}"), "empty_dictionary()");
  EXPECT_EQ(value("-2"), "-2");
}

TEST(Render, Conditions) {
  const auto cond = [](const char* src) {
    return to_string(render_cond(parse_source(std::string("if ") + src + ":\n    pass")[0].operands[0]));
  };
  EXPECT_EQ(cond("a == b"), "equality(a, b)");
  EXPECT_EQ(cond("a <= b"), "less_equal(a, b)");
  EXPECT_EQ(cond("a >= b"), "greater_equal(a, b)");
  EXPECT_EQ(cond("not done"), "negation(truth(done))");
  EXPECT_EQ(cond("a > 0 and b < 1 and c"),
            "conjunction(conjunction(greater(a, 0), less(b, 1)), truth(c))");
  EXPECT_EQ(cond("a or b"), "disjunction(truth(a), truth(b))");
  EXPECT_EQ(cond("flag"), "truth(flag)");
}

TEST(Extract, ScopesAndRebinding) {
  const auto out = run(
      "a = {}\n"
      "def f(a):\n"
      "    for k in a:\n"
      "        pass\n"
      "for k in a:\n"
      "    pass\n"
      "a = []\n"
      "for k in a:\n"
      "    pass\n"
      "a = input()\n"
      "for k in a:\n"
      "    pass\n");
  std::vector<Goal> loops;
  for (const auto& s : out) {
    if (s.stmt.kind == StmtKind::ForIn) loops.push_back(*s.goal);
  }
  ASSERT_EQ(loops.size(), 4u);
  EXPECT_EQ(loops[0], G({"iterate()", "element()", "collection(a)"}));
  EXPECT_EQ(loops[1], G({"iterate()", "keys()", "dictionary(a)"}));
  EXPECT_EQ(loops[2], G({"iterate()", "element()", "list(a)"}));
  EXPECT_EQ(loops[3], G({"iterate()", "character()", "string(a)"}));

  TypeEnv env;
  env.bind("xs", TypeTag::List);
  const auto seeded = extract(parse_source("for e in xs:\n    pass\n"), env);
  EXPECT_EQ(seeded[0].goal, G({"iterate()", "element()", "list(xs)"}));
}

TEST(Extract, CorpusGoalsAreGroundAndInventNothing) {
  std::size_t checked = 0;
  for (const auto& e : fs::recursive_directory_iterator(CCGCOMMENT_CORPUS_DIR)) {
    if (e.path().extension() != ".py") continue;
    const auto parsed = parse_source(slurp(e.path()));
    const auto out = extract(parsed);
    EXPECT_EQ(out.size(), flatten(parsed).size());
    for (const auto& s : out) {
      EXPECT_TRUE(s.stmt.body.empty() && s.stmt.orelse.empty());
      if (s.stmt.kind == StmtKind::Unsupported) {
        EXPECT_FALSE(s.goal);
        continue;
      }
      ASSERT_TRUE(s.goal) << e.path();
      std::set<std::string> allowed;
      for (const auto& op : s.stmt.operands) spelled(op, allowed);
      allowed.insert(s.stmt.name);
      allowed.insert(s.stmt.params.begin(), s.stmt.params.end());
      for (const auto& p : s.goal->predicates()) {
        EXPECT_TRUE(is_ground(p));
        std::set<std::string> used;
        constants(p, used);
        for (const auto& c : used) {
          EXPECT_TRUE(allowed.count(c)) << c << " in " << to_string(p) << " at " << e.path();
        }
      }
      ++checked;
    }
  }
  EXPECT_GE(checked, 60u);
}

TEST(Extract, Deterministic) {
  const auto text = slurp(fs::path(CCGCOMMENT_CORPUS_DIR) / "trapezoidal_rule.py");
  const auto a = extract(parse_source(text));
  const auto b = extract(parse_source(text));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(show(a[i].goal), show(b[i].goal));
    EXPECT_EQ(a[i].stmt, b[i].stmt);
  }
}
