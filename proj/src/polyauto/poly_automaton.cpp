#include "pprod/poly_automaton.hpp"

#include <algorithm>
#include <set>

#include "pprod/errors.hpp"

namespace pprod {

bool PolyAutomaton::has_letter(const std::string& a) const {
  return std::find(alphabet.begin(), alphabet.end(), a) != alphabet.end();
}

bool PolyAutomaton::has_variable(const std::string& v) const {
  return std::find(variables.begin(), variables.end(), v) != variables.end();
}

const Poly& PolyAutomaton::transition(const std::string& letter, const std::string& variable) const {
  static const Poly zero;
  const auto row = transitions.find(letter);
  if (row == transitions.end()) return zero;
  const auto it = row->second.find(variable);
  return it == row->second.end() ? zero : it->second;
}

void PolyAutomaton::set_transition(const std::string& letter, const std::string& variable, Poly p) {
  transitions[letter][variable] = std::move(p);
}

void check_initial(const PolyAutomaton& A, const Poly& p) {
  for (const auto& v : p.variables())
    if (!A.has_variable(v)) throw SchemaError("undeclared variable '" + v + "'");
  if (p.has_constant_term()) throw PreconditionError("polynomial " + p.to_string(A.order()) + " has a constant term");
}

void PolyAutomaton::validate() const {
  std::set<std::string> seen;
  for (const auto& a : alphabet) {
    if (a.empty()) throw SchemaError("empty letter");
    if (!seen.insert(a).second) throw SchemaError("duplicate letter '" + a + "'");
  }
  seen.clear();
  for (const auto& v : variables) {
    if (!seen.insert(v).second) throw SchemaError("duplicate variable '" + v + "'");
    if (!output.contains(v)) throw SchemaError("no output for variable '" + v + "'");
  }
  for (const auto& [v, c] : output)
    if (!has_variable(v)) throw SchemaError("output for undeclared variable '" + v + "'");
  for (const auto& [a, row] : transitions) {
    if (!has_letter(a)) throw SchemaError("transition on unknown letter '" + a + "'");
    for (const auto& [v, p] : row) {
      if (!has_variable(v)) throw SchemaError("transition from undeclared variable '" + v + "'");
      for (const auto& u : p.variables())
        if (!has_variable(u)) throw SchemaError("undeclared variable '" + u + "'");
      if (p.has_constant_term())
        throw SchemaError("transition " + a + "/" + v + " has a constant term");
    }
  }
  if (!rule.speciality.special())
    throw PreconditionError("polynomial automata need a special rule; " + rule.normal_form.to_string() +
                            " fails the identity checks");
}

PolyAutomaton from_term_automaton(const TermAutomaton& A) {
  if (!A.rule.speciality.special())
    throw PreconditionError("rule " + A.rule.normal_form.to_string() + " is not special");
  PolyAutomaton out;
  out.alphabet = A.alphabet;
  out.variables = A.variables;
  out.rule = A.rule;
  out.output = A.output;
  for (const auto& [a, row] : A.transitions)
    for (const auto& [v, t] : row) out.set_transition(a, v, to_poly(t));
  return out;
}

PolyExtender::PolyExtender(const Poly& rule, std::function<Poly(const std::string&)> image, MonomialOrder order,
                           Pivot pivot)
    : rule_(rule), image_(std::move(image)), order_(std::move(order)), pivot_(pivot) {}

Poly PolyExtender::operator()(const Poly& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) out += c * of_monomial(m);
  return out;
}

Poly PolyExtender::of_monomial(const Monomial& m) {
  if (m.is_one()) throw PreconditionError("cannot extend a constant term");
  if (m.degree() == 1) return image_(m.factors().front().first);
  if (const auto it = memo_.find(m); it != memo_.end()) return it->second;

  const auto& fs = m.factors();
  auto by_rank = [&](const Monomial::Factor& a, const Monomial::Factor& b) {
    return order_.rank(a.first) < order_.rank(b.first);
  };
  const std::string& v = pivot_ == Pivot::First ? std::min_element(fs.begin(), fs.end(), by_rank)->first
                                                 : std::max_element(fs.begin(), fs.end(), by_rank)->first;
  const Monomial rest = m.without_one(v);
  Poly dv = image_(v);
  Poly drest = of_monomial(rest);
  Poly result = rule_.subst({{kRuleX, Poly::variable(v)},
                             {kRuleXd, std::move(dv)},
                             {kRuleY, Poly::monomial(rest)},
                             {kRuleYd, std::move(drest)}});
  memo_.emplace(m, result);
  return result;
}

Poly delta_extend(const PolyAutomaton& A, const std::string& letter, const Poly& p, Pivot pivot) {
  if (!A.has_letter(letter)) throw SchemaError("letter '" + letter + "' is not in the alphabet");
  PolyExtender ext(
      A.rule.normal_form, [&](const std::string& v) { return A.transition(letter, v); }, A.order(), pivot);
  return ext(p);
}

void check_degree(const Poly& p, const Limits& limits) {
  if (p.degree() > limits.max_degree)
    throw ResourceLimitError("max_degree", "degree " + std::to_string(p.degree()) + " exceeds cap " +
                                               std::to_string(limits.max_degree));
}

Poly delta_word(const PolyAutomaton& A, const Poly& p, const Word& w, const Limits& limits) {
  Poly cur = p;
  for (const auto& a : w) {
    cur = delta_extend(A, a, cur);
    check_degree(cur, limits);
  }
  return cur;
}

Rational output(const PolyAutomaton& A, const Poly& p) { return p.eval(A.output); }

Rational coefficient(const PolyAutomaton& A, const Poly& p, const Word& w, const Limits& limits) {
  return output(A, delta_word(A, p, w, limits));
}

}  // namespace pprod
