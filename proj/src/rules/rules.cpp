#include "pprod/rules.hpp"

#include <array>
#include <cassert>
#include <map>
#include <stdexcept>

#include "pprod/errors.hpp"
#include "pprod/parser.hpp"

namespace pprod {
namespace {

const std::array<std::pair<const char*, const char*>, 4> kPresets{{
    {"hadamard", "xd*yd"},
    {"shuffle", "xd*y + x*yd"},
    {"infiltration", "xd*y + x*yd + xd*yd"},
    {"trivial0", "0"},
}};

bool reserved(const std::string& v) { return v == kRuleX || v == kRuleXd || v == kRuleY || v == kRuleYd; }

Poly var(const char* name) { return Poly::variable(name); }

Monomial mono(std::initializer_list<const char*> names) {
  std::vector<Monomial::Factor> f;
  for (auto* n : names) f.emplace_back(n, 1);
  return Monomial::from_factors(std::move(f));
}

}  // namespace

std::string SimpleForm::to_string() const {
  return "(" + alpha.to_string() + ", " + beta.to_string() + ", " + gamma.to_string() + ")";
}

std::optional<std::string> rule_preset(std::string_view name) {
  for (const auto& [key, text] : kPresets)
    if (name == key) return std::string(text);
  return std::nullopt;
}

Term parse_rule(std::string_view text) {
  const auto preset = rule_preset(text);
  Term t = parse_term(preset ? std::string_view(*preset) : text);
  for (const auto& v : t.variables())
    if (!reserved(v)) throw SchemaError("rule mentions foreign variable '" + v + "' (allowed: x, xd, y, yd)");
  return t;
}

Poly rule_to_poly(const Term& rule) { return to_poly(rule); }

Poly apply_rule(const Poly& rule, const Poly& a, const Poly& ad, const Poly& b, const Poly& bd) {
  return rule.subst({{kRuleX, a}, {kRuleXd, ad}, {kRuleY, b}, {kRuleYd, bd}});
}

Poly p_add_difference(const Poly& rule) {
  const Poly x = var("x"), xd = var("xd"), y = var("y"), yd = var("yd"), z = var("z"), zd = var("zd");
  return apply_rule(rule, x + y, xd + yd, z, zd) - apply_rule(rule, x, xd, z, zd) - apply_rule(rule, y, yd, z, zd);
}

Poly p_assoc_difference(const Poly& rule) {
  const Poly x = var("x"), xd = var("xd"), y = var("y"), yd = var("yd"), z = var("z"), zd = var("zd");
  const Poly lhs = apply_rule(rule, x, xd, y * z, apply_rule(rule, y, yd, z, zd));
  const Poly rhs = apply_rule(rule, x * y, apply_rule(rule, x, xd, y, yd), z, zd);
  return lhs - rhs;
}

Poly p_comm_difference(const Poly& rule) {
  const Poly x = var("x"), xd = var("xd"), y = var("y"), yd = var("yd");
  return apply_rule(rule, x, xd, y, yd) - apply_rule(rule, y, yd, x, xd);
}

BilinearDiagnostics bilinear_diagnostics(const Poly& rule) {
  BilinearDiagnostics d;
  const Monomial xy = mono({"x", "y"}), xyd = mono({"x", "yd"}), xdy = mono({"xd", "y"}),
                 xdyd = mono({"xd", "yd"});
  d.alpha = rule.coefficient(xy);
  d.beta1 = rule.coefficient(xyd);
  d.beta2 = rule.coefficient(xdy);
  d.gamma = rule.coefficient(xdyd);
  d.bilinear = true;
  for (const auto& [m, c] : rule.terms())
    if (m != xy && m != xyd && m != xdy && m != xdyd) d.bilinear = false;
  const Rational ag = d.alpha * d.gamma;
  d.alpha_balanced = (d.alpha * (d.beta1 - d.beta2)).is_zero();
  d.gamma_balanced = (d.gamma * (d.beta1 - d.beta2)).is_zero();
  d.beta1_quadratic = ag == d.beta1 * (d.beta1 - 1);
  d.beta2_quadratic = ag == d.beta2 * (d.beta2 - 1);
  return d;
}

SpecialityReport check_special(const Poly& rule) {
  SpecialityReport r;
  const std::array<std::pair<const char*, Poly>, 3> diffs{{
      {"P-add", p_add_difference(rule)},
      {"P-assoc", p_assoc_difference(rule)},
      {"P-comm", p_comm_difference(rule)},
  }};
  r.add_ok = diffs[0].second.is_zero();
  r.assoc_ok = diffs[1].second.is_zero();
  r.comm_ok = diffs[2].second.is_zero();
  for (const auto& [name, diff] : diffs) {
    if (diff.is_zero()) continue;
    r.failing.emplace_back(name);
    if (!r.failing_identity) r.failing_identity = diff;
  }
  if (r.special()) {
    r.simple = classify_simple(rule);
    if (r.simple) r.unit_eta = multiplicative_unit(*r.simple);
  }
  return r;
}

std::optional<SimpleForm> classify_simple(const Poly& rule) {
  if (!p_add_difference(rule).is_zero() || !p_assoc_difference(rule).is_zero() ||
      !p_comm_difference(rule).is_zero())
    return std::nullopt;
  const BilinearDiagnostics d = bilinear_diagnostics(rule);
  // Special rules are simple; anything else here means the identity checks are broken.
  if (!d.bilinear || d.beta1 != d.beta2 || d.alpha * d.gamma != d.beta1 * (d.beta1 - 1))
    throw std::logic_error("special rule " + rule.to_string() + " is not of simple form");
  return SimpleForm{d.alpha, d.beta1, d.gamma};
}

std::optional<Rational> multiplicative_unit(const SimpleForm& s) {
  if (s.beta.is_zero() && s.gamma.is_zero()) return std::nullopt;
  if (s.beta.is_zero()) return -(s.beta - 1) / s.gamma;
  const Rational eta = -s.alpha / s.beta;
  if (!s.gamma.is_zero() && eta != -(s.beta - 1) / s.gamma)
    throw std::logic_error("inconsistent unit for " + s.to_string());
  return eta;
}

bool ideal_compatible(const Poly& rule) {
  for (const auto& [m, c] : rule.terms())
    if (m.exponent(kRuleY) == 0 && m.exponent(kRuleYd) == 0) return false;
  return true;
}

bool check_reversal_commutation(const Poly& rule) {
  if (!check_special(rule).special())
    throw PreconditionError("reversal commutation is only characterised for special rules");
  const auto [rl, lr] = reversal_sides(rule);
  return rl == lr;
}

std::pair<Poly, Poly> reversal_sides(const Poly& rule) {
  const Term rule_term = [&] {
    // Any term with the right normal form will do: the result is compared modulo ≈.
    Term t;
    for (const auto& [m, c] : rule.terms()) {
      Term prod;
      bool first = true;
      for (const auto& [name, e] : m.factors())
        for (unsigned k = 0; k < e; ++k) {
          prod = first ? Term::variable(name) : Term::product(prod, Term::variable(name));
          first = false;
        }
      Term scaled = Term::scale(c, prod);
      t = t.is_zero() ? scaled : Term::sum(t, scaled);
    }
    return t;
  }();

  const std::map<std::string, std::string> left{{"x", "Lx"}, {"Rx", "LRx"}, {"y", "Ly"}, {"Ry", "LRy"}};
  const std::map<std::string, std::string> right{{"x", "Rx"}, {"Lx", "LRx"}, {"y", "Ry"}, {"Ly", "LRy"}};
  auto via = [](const std::map<std::string, std::string>& table) {
    return [&table](const std::string& v) {
      const auto it = table.find(v);
      if (it == table.end()) throw std::logic_error("no derivative image for " + v);
      return Term::variable(it->second);
    };
  };
  const Term xy = Term::product(Term::variable("x"), Term::variable("y"));
  const Term rl = extend_term(rule_term, via(right), extend_term(rule_term, via(left), xy));
  const Term lr = extend_term(rule_term, via(left), extend_term(rule_term, via(right), xy));
  return {to_poly(rl), to_poly(lr)};
}

ProductRule ProductRule::from_term(Term source) {
  ProductRule r;
  r.normal_form = rule_to_poly(source);
  r.source = std::move(source);
  r.speciality = check_special(r.normal_form);
  return r;
}

ProductRule ProductRule::parse(std::string_view text) { return from_term(parse_rule(text)); }

}  // namespace pprod
