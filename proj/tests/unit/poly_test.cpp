#include <gtest/gtest.h>

#include "pprod/errors.hpp"
#include "pprod/parser.hpp"
#include "pprod/poly.hpp"
#include "support/gen.hpp"

using namespace pprod;

namespace {
Poly P(const char* s) { return parse_poly(s); }
}  // namespace

TEST(Poly, MulExamples) {
  EXPECT_EQ(poly_mul(P("x + y"), P("x - y")), P("x^2 - y^2"));
  EXPECT_TRUE(poly_mul(Poly(), P("x^3 + 2*y")).is_zero());
  EXPECT_EQ(poly_mul(P("2*x"), P("3*y")), P("6*x*y"));
}

TEST(Poly, MulDegreeAndPoly0Closure) {
  testkit::Gen gen(7);
  const std::vector<std::string> vars{"a", "b", "c"};
  for (int i = 0; i < 50; ++i) {
    Poly p = gen.poly(vars, 4, 3, false);
    Poly q = gen.poly(vars, 4, 3, false);
    if (p.is_zero() || q.is_zero()) continue;
    Poly r = p * q;
    EXPECT_EQ(r.degree(), p.degree() + q.degree());
    EXPECT_FALSE(r.has_constant_term());
  }
}

TEST(Poly, EvalExamples) {
  EXPECT_EQ(poly_eval(P("x^2 + y"), {{"x", 2}, {"y", 3}}), Rational(7));
  EXPECT_EQ(poly_eval(P("3*x*y - 1/2*x"), {{"x", 2}, {"y", Rational(1, 3)}}), Rational(1));
  EXPECT_EQ(poly_eval(P("5*x*y - z^3 + 2*x"), {{"x", 0}, {"y", 0}, {"z", 0}}), Rational(0));
}

TEST(Poly, EvalNamesMissingVariable) {
  try {
    (void)poly_eval(P("x + w"), {{"x", 1}});
    FAIL() << "expected UnassignedVariableError";
  } catch (const UnassignedVariableError& e) {
    EXPECT_EQ(e.variable(), "w");
  }
}

TEST(Poly, SubstExamples) {
  EXPECT_EQ(poly_subst(P("x*y"), {{"x", P("u + v")}, {"y", P("w")}}), P("u*w + v*w"));
  const Poly p = P("3*x^2*y - y + 7");
  EXPECT_EQ(poly_subst(p, {{"x", P("x")}, {"y", P("y")}}), p);
  // shuffle rule under {x->α, xd->Dα, y->β, yd->Dβ}
  const Poly rule = P("xd*y + x*yd");
  EXPECT_EQ(poly_subst(rule, {{"x", P("alpha")}, {"xd", P("Dalpha")}, {"y", P("beta")}, {"yd", P("Dbeta")}}),
            P("Dalpha*beta + alpha*Dbeta"));
  EXPECT_THROW((void)poly_subst(P("x*q"), {{"x", P("1")}}), UnassignedVariableError);
}

TEST(Poly, SubstAgreesWithEval) {
  testkit::Gen gen(11);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 50; ++i) {
    Poly p = gen.poly(vars, 5, 4);
    std::map<std::string, Rational> values;
    std::map<std::string, Poly> images;
    for (const auto& v : vars) {
      values[v] = gen.rational();
      images[v] = Poly(values[v]);
    }
    EXPECT_EQ(poly_subst(p, images), Poly(poly_eval(p, values)));
  }
}

TEST(Poly, RingLaws) {
  testkit::Gen gen(2024);
  const std::vector<std::string> vars{"v1", "v2", "v3", "v4", "v5"};
  for (int i = 0; i < 40; ++i) {
    Poly a = gen.poly(vars, 6, 3);
    Poly b = gen.poly(vars, 6, 3);
    Poly c = gen.poly(vars, 6, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Poly, EvaluationIsHomomorphism) {
  testkit::Gen gen(5);
  const std::vector<std::string> vars{"x", "y"};
  for (int i = 0; i < 40; ++i) {
    Poly a = gen.poly(vars, 4, 3);
    Poly b = gen.poly(vars, 4, 3);
    std::map<std::string, Rational> at{{"x", gen.rational()}, {"y", gen.rational()}};
    EXPECT_EQ((a * b).eval(at), a.eval(at) * b.eval(at));
    EXPECT_EQ((a + b).eval(at), a.eval(at) + b.eval(at));
  }
}

TEST(MonomialOrder, GrevlexFollowsDeclarationOrder) {
  const MonomialOrder order({"x", "y", "z"});
  auto m = [](const char* s) { return parse_poly(s).terms().begin()->first; };
  EXPECT_TRUE(order.greater(m("x"), m("y")));
  EXPECT_TRUE(order.greater(m("y"), m("z")));
  EXPECT_TRUE(order.greater(m("x^2"), m("x*y")));
  EXPECT_TRUE(order.greater(m("x*y"), m("y^2")));
  EXPECT_TRUE(order.greater(m("y^2"), m("x*z")));  // grevlex, not lex
  EXPECT_TRUE(order.greater(m("z^3"), m("x^2")));  // graded first
  const MonomialOrder flipped({"z", "y", "x"});
  EXPECT_TRUE(flipped.greater(m("z"), m("x")));
  // undeclared variables rank below declared ones, by name
  EXPECT_TRUE(order.greater(m("z"), m("a")));
  EXPECT_TRUE(order.greater(m("a"), m("b")));
}

TEST(Poly, PrintsInParserSyntax) {
  const MonomialOrder order({"x", "y"});
  const Poly p = P("-1/2*x^2*y + 3*y - x + 4");
  EXPECT_EQ(p.to_string(order), "-1/2*x^2*y - x + 3*y + 4");
  EXPECT_EQ(P(p.to_string(order).c_str()), p);
  EXPECT_EQ(Poly().to_string(), "0");
}
