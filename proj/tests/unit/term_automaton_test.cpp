#include <gtest/gtest.h>

#include "pprod/errors.hpp"
#include "pprod/parser.hpp"
#include "pprod/term_automaton.hpp"
#include "support/series.hpp"

using namespace pprod;
using testkit::word;

namespace {

Term T(const char* s) { return parse_term(s); }

PointedTermAutomaton zero_series(const std::vector<std::string>& alphabet, const std::string& rule) {
  return testkit::pointed(testkit::term_automaton(alphabet, rule, {"z"}, {{"z", 0}}, {}), "0");
}

Term random_term(testkit::Gen& gen, const std::vector<std::string>& vars, int depth) {
  const int pick = depth == 0 ? 0 : gen.integer(0, 3);
  switch (pick) {
    case 0:
      return Term::variable(vars[static_cast<std::size_t>(gen.integer(0, static_cast<int>(vars.size()) - 1))]);
    case 1:
      return Term::scale(gen.nonzero_rational(3), random_term(gen, vars, depth - 1));
    case 2:
      return Term::sum(random_term(gen, vars, depth - 1), random_term(gen, vars, depth - 1));
    default:
      return Term::product(random_term(gen, vars, depth - 1), random_term(gen, vars, depth - 1));
  }
}

}  // namespace

TEST(PExtend, Examples) {
  const auto dexp = testkit::double_exponential();
  EXPECT_EQ(p_extend(dexp.automaton, "a", T("x*x")), T("(x*x)*(x*x)"));
  EXPECT_TRUE(p_extend(dexp.automaton, "a", Term()).is_zero());
  const auto fact = testkit::factorial();
  EXPECT_EQ(p_extend(fact.automaton, "a", T("x*x")), T("(x*x)*x + x*(x*x)"));
  EXPECT_THROW((void)p_extend(fact.automaton, "b", T("x")), SchemaError);
}

TEST(Output, Examples) {
  EXPECT_EQ(output(testkit::double_exponential().automaton, T("x*x")), Rational(4));
  EXPECT_EQ(output(testkit::fibonacci().automaton, T("3*x + 2*y")), Rational(2));
  EXPECT_EQ(output(testkit::fibonacci().automaton, Term()), Rational(0));
}

TEST(Coefficient, NamedSeries) {
  const auto fib = testkit::fibonacci();
  EXPECT_EQ(to_poly(extend_word(fib.automaton, fib.initial, word("aaa"))), parse_poly("3*x + 2*y"));
  EXPECT_EQ(coefficient(fib.automaton, fib.initial, word("aaa")), Rational(2));
  const auto dexp = testkit::double_exponential();
  EXPECT_EQ(coefficient(dexp.automaton, dexp.initial, word("aa")), Rational(16));
  const auto fact = testkit::factorial();
  EXPECT_EQ(coefficient(fact.automaton, fact.initial, word("aaaa")), Rational(24));
}

TEST(Coefficient, SharedAndTreeModesAgree) {
  const auto dexp = testkit::double_exponential();
  TermOptions tree;
  tree.share = false;
  for (unsigned n = 0; n <= 4; ++n) {
    const Word w(n, "a");
    const Rational expected = Rational(2).pow(1U << n);
    EXPECT_EQ(coefficient(dexp.automaton, dexp.initial, w), expected);
    EXPECT_EQ(coefficient(dexp.automaton, dexp.initial, w, tree), expected);
  }
}

TEST(Coefficient, TermSizeCapIsEnforced) {
  const auto dexp = testkit::double_exponential();
  TermOptions tiny;
  tiny.share = false;
  tiny.max_term_nodes = 100;
  EXPECT_THROW((void)coefficient(dexp.automaton, dexp.initial, Word(8, "a"), tiny), ResourceLimitError);
  try {
    (void)coefficient(dexp.automaton, dexp.initial, Word(8, "a"), tiny);
  } catch (const ResourceLimitError& e) {
    EXPECT_EQ(e.limit(), "max_term_nodes");
  }
}

TEST(ClosureCombine, SumOfSelfIsScaleTwo) {
  const auto fib = testkit::fibonacci();
  const std::vector<PointedTermAutomaton> two{fib, fib};
  const auto sum = closure_combine(CombineOp::sum(), two);
  const auto scaled = closure_combine(CombineOp::scale(2), std::span(&fib, 1));
  EXPECT_TRUE(sum.automaton.has_variable("l.x"));
  EXPECT_TRUE(sum.automaton.has_variable("r.y"));
  EXPECT_EQ(testkit::table_of(sum, 4), testkit::table_of(scaled, 4));
}

TEST(ClosureCombine, HadamardOfOnesIsOnes) {
  const auto one = testkit::ones({"a", "b"}, "hadamard");
  const std::vector<PointedTermAutomaton> two{one, one};
  const auto prod = closure_combine(CombineOp::product(), two);
  for (const auto& [w, c] : testkit::table_of(prod, 4)) EXPECT_EQ(c, Rational(1));
}

TEST(ClosureCombine, LeftDerivativeShifts) {
  const auto fib = testkit::fibonacci();
  const auto d = closure_combine(CombineOp::left_derivative("a"), std::span(&fib, 1));
  EXPECT_EQ(coefficient(d.automaton, d.initial, word("aa")), Rational(2));
}

TEST(ClosureCombine, Mismatches) {
  const std::vector<PointedTermAutomaton> rules{testkit::ones({"a"}, "shuffle"), testkit::ones({"a"}, "hadamard")};
  EXPECT_THROW((void)closure_combine(CombineOp::sum(), rules), SchemaError);
  const std::vector<PointedTermAutomaton> alphabets{testkit::ones({"a"}, "shuffle"), testkit::ones({"a", "b"}, "shuffle")};
  EXPECT_THROW((void)closure_combine(CombineOp::product(), alphabets), SchemaError);
  EXPECT_THROW((void)closure_combine(CombineOp::sum(), std::span(alphabets.data(), 1)), SchemaError);
}

TEST(Antiderivative, Examples) {
  const auto zero = antiderivative({{"a", zero_series({"a"}, "shuffle")}}, 5);
  const auto zt = testkit::table_of(zero, 4);
  EXPECT_EQ(zt.at({}), Rational(5));
  for (const auto& [w, c] : zt)
    if (!w.empty()) EXPECT_EQ(c, Rational(0));

  const auto shifted = antiderivative({{"a", testkit::ones({"a"}, "shuffle")}}, 0);
  EXPECT_EQ(testkit::table_of(shifted, 3),
            (testkit::Table{{{}, 0}, {word("a"), 1}, {word("aa"), 1}, {word("aaa"), 1}}));
}

TEST(Antiderivative, ReductionGadget) {
  const std::vector<std::string> ab{"a", "b"};
  const auto f = testkit::word_tree(ab, "shuffle", 3, {{word(""), 3}, {word("a"), 1}, {word("ab"), -2}, {word("bba"), 7}});
  const auto h = antiderivative({{"a", zero_series(ab, "shuffle")}, {"b", f}}, 0);
  const auto g = antiderivative({{"a", h}, {"b", zero_series(ab, "shuffle")}}, 0);
  for (const auto& w : testkit::words_upto(ab, 3)) {
    EXPECT_EQ(coefficient(g.automaton, g.initial, testkit::concat(word("ab"), w)),
              coefficient(f.automaton, f.initial, w));
    EXPECT_EQ(coefficient(g.automaton, g.initial, testkit::concat(word("ba"), w)), Rational(0));
  }
}

TEST(TermAutomatonProperty, ExtensionIsLinear) {
  testkit::Gen gen(3);
  for (const char* rule : {"hadamard", "shuffle", "infiltration", "xd*y", "x*y + xd*xd*yd"}) {
    auto A = testkit::term_automaton({"a"}, rule, {"x", "y"}, {{"x", 1}, {"y", 2}},
                                     {{"a", {{"x", "x*y + y"}, {"y", "2*x"}}}});
    for (int i = 0; i < 20; ++i) {
      const Term u = random_term(gen, A.variables, 3), v = random_term(gen, A.variables, 3);
      const Rational c = gen.nonzero_rational();
      EXPECT_EQ(p_extend(A, "a", Term::sum(Term::scale(c, u), v)),
                Term::sum(Term::scale(c, p_extend(A, "a", u)), p_extend(A, "a", v)));
    }
  }
}

TEST(TermAutomatonProperty, Homomorphism) {
  testkit::Gen gen(8);
  const std::vector<std::string> ab{"a", "b"};
  for (const char* rule : {"hadamard", "shuffle", "infiltration", "xd*y", "x*y + xd*yd"}) {
    auto A = testkit::term_automaton(ab, rule, {"x", "y"}, {{"x", 1}, {"y", -1}},
                                     {{"a", {{"x", "x*y"}, {"y", "x + y"}}}, {"b", {{"x", "y*y"}}}});
    const testkit::TableAlgebra alg(ab, A.rule.normal_form);
    std::map<std::string, testkit::Table> at;
    for (const auto& v : A.variables) at[v] = testkit::table_of({A, Term::variable(v)}, 3);
    for (int i = 0; i < 8; ++i) {
      const Term t = random_term(gen, A.variables, 2);
      auto interpret = [&](auto&& self, const Term& u) -> testkit::Table {
        switch (u.kind()) {
          case Term::Kind::Zero: return {};
          case Term::Kind::Variable: return at.at(u.name());
          case Term::Kind::Scale: return alg.scale(u.coefficient(), self(self, u.lhs()), 3);
          case Term::Kind::Sum: return alg.add(self(self, u.lhs()), self(self, u.rhs()), 3);
          default: return alg.product(self(self, u.lhs()), self(self, u.rhs()), 3);
        }
      };
      EXPECT_EQ(testkit::table_of({A, t}, 3), alg.add(interpret(interpret, t), {}, 3)) << rule << " " << t.to_string();
    }
  }
}

TEST(TermAutomatonProperty, DerivativeAdjunction) {
  testkit::Gen gen(12);
  const std::vector<std::string> ab{"a", "b"};
  auto A = testkit::term_automaton(ab, "infiltration", {"x", "y"}, {{"x", 2}, {"y", 1}},
                                   {{"a", {{"x", "y*x"}, {"y", "y"}}}, {"b", {{"x", "x + y"}, {"y", "0"}}}});
  for (int i = 0; i < 10; ++i) {
    const PointedTermAutomaton p{A, random_term(gen, A.variables, 2)};
    for (const auto& a : ab) {
      const auto d = closure_combine(CombineOp::left_derivative(a), std::span(&p, 1));
      for (const auto& w : testkit::words_upto(ab, 3))
        EXPECT_EQ(coefficient(A, p.initial, testkit::concat({a}, w)), coefficient(d.automaton, d.initial, w));
    }
  }
}

// (f+g)∗h = f∗h + g∗h, f∗(g∗h) = (f∗g)∗h, f∗g = g∗f on random truncated series.
TEST(TermAutomatonProperty, NotableRulesAreBacOnTables) {
  testkit::Gen gen(41);
  const std::vector<std::string> ab{"a", "b"};
  for (const char* rule : {"hadamard", "shuffle", "infiltration"}) {
    const testkit::TableAlgebra alg(ab, ProductRule::parse(rule).normal_form);
    for (int i = 0; i < 3; ++i) {
      const auto f = testkit::word_tree(ab, rule, 3, testkit::random_table(gen, ab, 3));
      const auto g = testkit::word_tree(ab, rule, 3, testkit::random_table(gen, ab, 3));
      const auto h = testkit::word_tree(ab, rule, 3, testkit::random_table(gen, ab, 3));
      auto op = [](CombineOp o, const PointedTermAutomaton& l, const PointedTermAutomaton& r) {
        const std::vector<PointedTermAutomaton> in{l, r};
        return closure_combine(o, in);
      };
      const auto mul = CombineOp::product(), add = CombineOp::sum();
      EXPECT_EQ(testkit::table_of(op(mul, op(add, f, g), h), 3),
                testkit::table_of(op(add, op(mul, f, h), op(mul, g, h)), 3));
      EXPECT_EQ(testkit::table_of(op(mul, f, op(mul, g, h)), 3), testkit::table_of(op(mul, op(mul, f, g), h), 3));
      EXPECT_EQ(testkit::table_of(op(mul, f, g), 3), testkit::table_of(op(mul, g, f), 3));
      // the independent recursion agrees
      EXPECT_EQ(testkit::table_of(op(mul, f, g), 3), alg.product(testkit::table_of(f, 3), testkit::table_of(g, 3), 3));
    }
  }
}

TEST(TermAutomatonProperty, LeftProductRuleIsNotCommutative) {
  const std::vector<std::string> ab{"a", "b"};
  const auto f = testkit::word_tree(ab, "xd*y", 2, {{word(""), 1}, {word("a"), 2}});
  const auto g = testkit::word_tree(ab, "xd*y", 2, {{word(""), 3}, {word("b"), 5}});
  const std::vector<PointedTermAutomaton> fg{f, g}, gf{g, f};
  EXPECT_NE(testkit::table_of(closure_combine(CombineOp::product(), fg), 2),
            testkit::table_of(closure_combine(CombineOp::product(), gf), 2));
}

TEST(TermAutomaton, ValidateRejectsBadDocuments) {
  TermAutomaton A = testkit::fibonacci().automaton;
  A.set_transition("a", "x", T("q"));
  EXPECT_THROW(A.validate(), SchemaError);
  A = testkit::fibonacci().automaton;
  A.output.erase("y");
  EXPECT_THROW(A.validate(), SchemaError);
  A = testkit::fibonacci().automaton;
  A.alphabet.push_back("a");
  EXPECT_THROW(A.validate(), SchemaError);
}
