#include "pprod/term_automaton.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "pprod/errors.hpp"

namespace pprod {

bool TermAutomaton::has_letter(const std::string& a) const {
  return std::find(alphabet.begin(), alphabet.end(), a) != alphabet.end();
}

bool TermAutomaton::has_variable(const std::string& v) const {
  return std::find(variables.begin(), variables.end(), v) != variables.end();
}

const Term& TermAutomaton::transition(const std::string& letter, const std::string& variable) const {
  static const Term zero;
  const auto row = transitions.find(letter);
  if (row == transitions.end()) return zero;
  const auto it = row->second.find(variable);
  return it == row->second.end() ? zero : it->second;
}

void TermAutomaton::set_transition(const std::string& letter, const std::string& variable, Term t) {
  transitions[letter][variable] = std::move(t);
}

void check_scoped(const TermAutomaton& A, const Term& t) {
  for (const auto& v : t.variables())
    if (!A.has_variable(v)) throw SchemaError("undeclared variable '" + v + "'");
}

void TermAutomaton::validate() const {
  std::set<std::string> seen;
  for (const auto& a : alphabet) {
    if (a.empty()) throw SchemaError("empty letter");
    if (!seen.insert(a).second) throw SchemaError("duplicate letter '" + a + "'");
  }
  seen.clear();
  for (const auto& v : variables)
    if (!seen.insert(v).second) throw SchemaError("duplicate variable '" + v + "'");
  for (const auto& v : variables)
    if (!output.contains(v)) throw SchemaError("no output for variable '" + v + "'");
  for (const auto& [v, c] : output)
    if (!has_variable(v)) throw SchemaError("output for undeclared variable '" + v + "'");
  for (const auto& [a, row] : transitions) {
    if (!has_letter(a)) throw SchemaError("transition on unknown letter '" + a + "'");
    for (const auto& [v, t] : row) {
      if (!has_variable(v)) throw SchemaError("transition from undeclared variable '" + v + "'");
      check_scoped(*this, t);
    }
  }
}

Term p_extend(const TermAutomaton& A, const std::string& letter, const Term& t, ExtendCache* cache) {
  if (!A.has_letter(letter)) throw SchemaError("letter '" + letter + "' is not in the alphabet");
  return extend_term(
      A.rule.source, [&](const std::string& v) { return A.transition(letter, v); }, t, cache);
}

Rational output(const TermAutomaton& A, const Term& t) {
  std::unordered_map<const void*, Rational> memo;
  auto go = [&](auto&& self, const Term& u) -> Rational {
    if (u.kind() == Term::Kind::Zero) return Rational(0);
    if (u.kind() == Term::Kind::Variable) {
      const auto it = A.output.find(u.name());
      if (it == A.output.end()) throw UnassignedVariableError(u.name());
      return it->second;
    }
    if (const auto hit = memo.find(u.id()); hit != memo.end()) return hit->second;
    Rational r;
    switch (u.kind()) {
      case Term::Kind::Scale:
        r = u.coefficient() * self(self, u.lhs());
        break;
      case Term::Kind::Sum:
        r = self(self, u.lhs()) + self(self, u.rhs());
        break;
      default: {
        const Rational left = self(self, u.lhs());
        r = left.is_zero() ? Rational(0) : left * self(self, u.rhs());
        break;
      }
    }
    memo.emplace(u.id(), r);
    return r;
  };
  return go(go, t);
}

Term extend_word(const TermAutomaton& A, const Term& t, const Word& w, const TermOptions& options) {
  Term cur = t;
  for (const auto& letter : w) {
    options.deadline.check("term extension");
    if (options.share) {
      ExtendCache cache;
      cur = p_extend(A, letter, cur, &cache);
    } else {
      cur = p_extend(A, letter, cur);
    }
    const std::uint64_t size = options.share ? cur.dag_size() : cur.tree_size();
    if (size > options.max_term_nodes)
      throw ResourceLimitError("max_term_nodes", "term reached " + std::to_string(size) + " nodes (cap " +
                                                     std::to_string(options.max_term_nodes) + ")");
  }
  return cur;
}

Rational coefficient(const TermAutomaton& A, const Term& t, const Word& w, const TermOptions& options) {
  return output(A, extend_word(A, t, w, options));
}

namespace {

Term rename_term(const Term& t, const std::string& prefix) {
  std::map<std::string, Term> images;
  for (const auto& v : t.variables()) images.emplace(v, Term::variable(prefix + v));
  return substitute(t, images);
}

void require_compatible(const TermAutomaton& a, const TermAutomaton& b) {
  if (a.alphabet != b.alphabet) throw SchemaError("automata have different alphabets");
  if (a.rule.normal_form != b.rule.normal_form) throw SchemaError("automata have different product rules");
}

// Disjoint union of already-prefixed automata.
TermAutomaton merge(const TermAutomaton& a, const TermAutomaton& b) {
  TermAutomaton out = a;
  for (const auto& v : b.variables) out.variables.push_back(v);
  for (const auto& [v, c] : b.output) out.output[v] = c;
  for (const auto& [letter, row] : b.transitions)
    for (const auto& [v, t] : row) out.transitions[letter][v] = t;
  return out;
}

}  // namespace

PointedTermAutomaton prefixed(const PointedTermAutomaton& p, const std::string& prefix) {
  PointedTermAutomaton out;
  TermAutomaton& A = out.automaton;
  A.alphabet = p.automaton.alphabet;
  A.rule = p.automaton.rule;
  for (const auto& v : p.automaton.variables) A.variables.push_back(prefix + v);
  for (const auto& [v, c] : p.automaton.output) A.output[prefix + v] = c;
  for (const auto& [letter, row] : p.automaton.transitions)
    for (const auto& [v, t] : row) A.transitions[letter][prefix + v] = rename_term(t, prefix);
  out.initial = rename_term(p.initial, prefix);
  return out;
}

PointedTermAutomaton closure_combine(const CombineOp& op, std::span<const PointedTermAutomaton> inputs) {
  const bool binary = op.kind == CombineOp::Kind::Sum || op.kind == CombineOp::Kind::Product;
  if (inputs.size() != (binary ? 2U : 1U)) throw SchemaError("wrong number of inputs for closure operation");
  if (!binary) {
    PointedTermAutomaton out = inputs[0];
    if (op.kind == CombineOp::Kind::Scale) {
      out.initial = Term::scale(op.scalar, out.initial);
    } else {
      out.initial = p_extend(out.automaton, op.letter, out.initial);
    }
    return out;
  }
  require_compatible(inputs[0].automaton, inputs[1].automaton);
  const PointedTermAutomaton l = prefixed(inputs[0], "l.");
  const PointedTermAutomaton r = prefixed(inputs[1], "r.");
  PointedTermAutomaton out;
  out.automaton = merge(l.automaton, r.automaton);
  out.initial = op.kind == CombineOp::Kind::Sum ? Term::sum(l.initial, r.initial) : Term::product(l.initial, r.initial);
  return out;
}

PointedTermAutomaton antiderivative(const std::map<std::string, PointedTermAutomaton>& family, const Rational& c) {
  if (family.empty()) throw SchemaError("anti-derivative needs a family indexed by the alphabet");
  const TermAutomaton& first = family.begin()->second.automaton;
  for (const auto& [a, member] : family) require_compatible(first, member.automaton);
  for (const auto& a : first.alphabet)
    if (!family.contains(a)) throw SchemaError("anti-derivative family misses letter '" + a + "'");
  if (family.size() != first.alphabet.size()) throw SchemaError("anti-derivative family has foreign letters");

  PointedTermAutomaton out;
  out.automaton.alphabet = first.alphabet;
  out.automaton.rule = first.rule;
  out.automaton.variables.push_back("g");
  out.automaton.output["g"] = c;
  for (std::size_t k = 0; k < first.alphabet.size(); ++k) {
    const std::string& a = first.alphabet[k];
    const PointedTermAutomaton member = prefixed(family.at(a), "i" + std::to_string(k) + ".");
    out.automaton = merge(out.automaton, member.automaton);
    out.automaton.set_transition(a, "g", member.initial);
  }
  out.initial = Term::variable("g");
  return out;
}

}  // namespace pprod
