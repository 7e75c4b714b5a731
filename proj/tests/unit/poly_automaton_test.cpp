#include <gtest/gtest.h>

#include "pprod/coefficient_table.hpp"
#include "pprod/errors.hpp"
#include "pprod/parser.hpp"
#include "pprod/poly_automaton.hpp"
#include "support/poly_gen.hpp"
#include "support/series.hpp"

using namespace pprod;
using testkit::word;

namespace {
Poly P(const char* s) { return parse_poly(s); }

PolyAutomaton one_var(const std::string& rule, const Rational& F, const char* delta) {
  return testkit::poly_automaton({"a"}, rule, {"x"}, {{"x", F}}, {{"a", {{"x", delta}}}});
}
}  // namespace

TEST(FromTermAutomaton, Examples) {
  EXPECT_EQ(from_term_automaton(testkit::double_exponential().automaton).transition("a", "x"), P("x^2"));
  const auto fib = from_term_automaton(testkit::fibonacci().automaton);
  EXPECT_EQ(fib.transition("a", "x"), P("x + y"));
  EXPECT_EQ(fib.transition("a", "y"), P("x"));
  const auto A = testkit::term_automaton({"a"}, "shuffle", {"x"}, {{"x", 1}}, {{"a", {{"x", "x*x + x*x"}}}});
  EXPECT_EQ(from_term_automaton(A).transition("a", "x"), P("2*x^2"));
  const auto bad = testkit::term_automaton({"a"}, "xd*y", {"x"}, {{"x", 1}}, {{"a", {{"x", "x*x"}}}});
  EXPECT_THROW((void)from_term_automaton(bad), PreconditionError);
}

TEST(DeltaExtend, Examples) {
  EXPECT_EQ(delta_extend(one_var("hadamard", 1, "x^2"), "a", P("x^4")), P("x^8"));
  EXPECT_EQ(delta_extend(one_var("shuffle", 1, "x^2"), "a", P("x^4")), P("4*x^5"));
  EXPECT_EQ(delta_extend(one_var("infiltration", 1, "x"), "a", P("x^2")), P("3*x^2"));  // sympy
  EXPECT_THROW((void)delta_extend(one_var("shuffle", 1, "x"), "a", P("x + 1")), PreconditionError);
}

TEST(PolyCoefficient, Examples) {
  const auto fact = one_var("shuffle", 1, "x^2");
  EXPECT_EQ(delta_word(fact, P("x"), word("aaaa")), P("24*x^5"));
  EXPECT_EQ(coefficient(fact, P("x"), word("aaaa")), Rational(24));
  EXPECT_EQ(coefficient(one_var("hadamard", 2, "x^2"), P("x"), word("aaa")), Rational(256));
  EXPECT_EQ(coefficient(fact, Poly(), word("aaa")), Rational(0));
  Limits tight;
  tight.max_degree = 4;
  EXPECT_THROW((void)coefficient(fact, P("x"), word("aaaa"), tight), ResourceLimitError);
}

TEST(CoefficientTable, LengthLexAndParallelAgree) {
  const auto A = testkit::poly_automaton({"a", "b"}, "infiltration", {"x", "y"}, {{"x", 1}, {"y", 2}},
                                         {{"a", {{"x", "x*y"}, {"y", "y"}}}, {"b", {{"x", "x + y"}}}});
  const auto par = coefficient_table(A, P("x"), 6);
  const auto ser = coefficient_table_serial(A, P("x"), 6);
  ASSERT_EQ(par.words.size(), 127U);
  EXPECT_EQ(par.words, ser.words);
  EXPECT_EQ(par.values, ser.values);
  EXPECT_EQ(par.words, testkit::words_upto(A.alphabet, 6));
  for (std::size_t i = 0; i < par.words.size(); i += 17)
    EXPECT_EQ(par.values[i], coefficient(A, P("x"), par.words[i]));
  Limits tight;
  tight.max_degree = 3;
  EXPECT_THROW((void)coefficient_table(A, P("x"), 6, tight), ResourceLimitError);
}

TEST(CoefficientTable, EmptyAlphabet) {
  PolyAutomaton A;
  A.rule = ProductRule::parse("shuffle");
  A.variables = {"x"};
  A.output = {{"x", 3}};
  const auto t = coefficient_table(A, P("x"), 5);
  EXPECT_EQ(t.words.size(), 1U);
  EXPECT_EQ(t.values.front(), Rational(3));
}

TEST(PolyAutomatonProperty, ExtensionWellDefined) {
  testkit::Gen gen(101);
  const std::vector<std::string> vars{"u", "v", "w"};
  for (int i = 0; i < 30; ++i) {
    const std::string rule = testkit::random_special_rule(gen);
    PolyAutomaton A;
    A.alphabet = {"a"};
    A.rule = ProductRule::parse(rule);
    A.variables = vars;
    for (const auto& v : vars) {
      A.output[v] = 0;
      A.set_transition("a", v, testkit::random_poly0(gen, vars, 2, 2));
    }
    const Poly alpha = testkit::random_poly0(gen, vars, 3, 3), beta = testkit::random_poly0(gen, vars, 3, 3);
    const Poly da = delta_extend(A, "a", alpha), db = delta_extend(A, "a", beta);
    EXPECT_EQ(delta_extend(A, "a", alpha * beta), apply_rule(A.rule.normal_form, alpha, da, beta, db)) << rule;
    EXPECT_EQ(delta_extend(A, "a", alpha * beta, Pivot::Last), delta_extend(A, "a", alpha * beta)) << rule;
    const Rational c = gen.rational();
    EXPECT_EQ(delta_extend(A, "a", c * alpha + beta), c * da + db);
  }
}

TEST(PolyAutomatonProperty, QuotientSoundness) {
  testkit::Gen gen(55);
  for (int i = 0; i < 12; ++i) {
    const std::string rule = testkit::random_special_rule(gen);
    TermAutomaton T;
    T.alphabet = {"a", "b"};
    T.rule = ProductRule::parse(rule);
    T.variables = {"x", "y"};
    T.output = {{"x", gen.rational(2)}, {"y", gen.rational(2)}};
    const char* shapes[] = {"x*y", "y*(x + y)", "2*x - y", "x*x", "y", "0"};
    for (const auto& a : T.alphabet)
      for (const auto& v : T.variables) T.set_transition(a, v, parse_term(shapes[gen.integer(0, 5)]));
    const PolyAutomaton A = from_term_automaton(T);
    const Term t = parse_term("x*(y + x) - 3*y");
    for (const auto& w : testkit::words_upto(T.alphabet, 4))
      ASSERT_EQ(coefficient(T, t, w), coefficient(A, to_poly(t), w)) << rule;
  }
}

TEST(PolyAutomatonProperty, SemanticsIsAlgebraHomomorphism) {
  testkit::Gen gen(66);
  testkit::RandomAutomatonShape shape;
  for (const auto& rule : testkit::notable_rules()) {
    const PolyAutomaton A = testkit::random_poly_automaton(gen, shape, rule);
    const testkit::TableAlgebra alg(A.alphabet, A.rule.normal_form);
    auto table = [&](const Poly& p) {
      testkit::Table t;
      const auto ct = coefficient_table(A, p, 3);
      for (std::size_t i = 0; i < ct.words.size(); ++i) t[ct.words[i]] = ct.values[i];
      return t;
    };
    for (int i = 0; i < 3; ++i) {
      const Poly p = testkit::random_poly0(gen, A.variables, 2, 2), q = testkit::random_poly0(gen, A.variables, 2, 2);
      const Rational c = gen.rational();
      EXPECT_EQ(table(p + q), alg.add(table(p), table(q), 3));
      EXPECT_EQ(table(c * p), alg.scale(c, table(p), 3));
      EXPECT_EQ(table(p * q), alg.product(table(p), table(q), 3)) << rule;
    }
  }
}

TEST(PolyAutomatonProperty, UnitLaw) {
  testkit::Gen gen(77);
  testkit::RandomAutomatonShape shape;
  for (const auto& rule : testkit::notable_rules()) {
    PolyAutomaton A = testkit::random_poly_automaton(gen, shape, rule);
    const auto eta = A.rule.speciality.unit_eta;
    ASSERT_TRUE(eta);
    A.variables.push_back("e");
    A.output["e"] = 1;
    for (const auto& a : A.alphabet)
      if (!eta->is_zero()) A.set_transition(a, "e", *eta * Poly::variable("e"));
    const Poly p = testkit::random_poly0(gen, {"x1", "x2", "x3"}, 2, 2);
    EXPECT_EQ(coefficient_table(A, p * Poly::variable("e"), 4).values, coefficient_table(A, p, 4).values) << rule;
  }
}
