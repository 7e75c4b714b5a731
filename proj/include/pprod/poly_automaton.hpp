#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pprod/limits.hpp"
#include "pprod/poly.hpp"
#include "pprod/rules.hpp"
#include "pprod/term_automaton.hpp"

namespace pprod {

/// ⟨X, F, Δ⟩ with Δ into constant-free polynomials, for a special rule.
struct PolyAutomaton {
  std::vector<std::string> alphabet;
  std::vector<std::string> variables;
  ProductRule rule;
  std::map<std::string, Rational> output;
  std::map<std::string, std::map<std::string, Poly>> transitions;  // letter -> variable -> poly

  bool has_letter(const std::string& a) const;
  bool has_variable(const std::string& v) const;
  const Poly& transition(const std::string& letter, const std::string& variable) const;
  void set_transition(const std::string& letter, const std::string& variable, Poly p);
  /// Declaration order, used for pivots and Gröbner computations.
  MonomialOrder order() const { return MonomialOrder(variables); }

  /// SchemaError on malformed content; PreconditionError if the rule is not special.
  void validate() const;
};

struct PointedPolyAutomaton {
  PolyAutomaton automaton;
  Poly initial;
};

/// Throws SchemaError unless p is over A's variables, PreconditionError if p has a constant term.
void check_initial(const PolyAutomaton& A, const Poly& p);

/// Quotient by the commutative-algebra axioms. PreconditionError for non-special rules.
PolyAutomaton from_term_automaton(const TermAutomaton& A);

/// Which variable a monomial v·m′ is split at.
enum class Pivot { First, Last };

/// Linear extension of a variable map through a special rule:
/// D(v·m′) = P(v, D v, m′, D m′), v the first (or last) variable of the monomial under `order`.
class PolyExtender {
public:
  PolyExtender(const Poly& rule, std::function<Poly(const std::string&)> image, MonomialOrder order,
               Pivot pivot = Pivot::First);
  Poly operator()(const Poly& p);

private:
  Poly of_monomial(const Monomial& m);

  const Poly& rule_;
  std::function<Poly(const std::string&)> image_;
  MonomialOrder order_;
  Pivot pivot_;
  std::map<Monomial, Poly> memo_;
};

Poly delta_extend(const PolyAutomaton& A, const std::string& letter, const Poly& p, Pivot pivot = Pivot::First);

/// Δ_w p, letters applied first to last. Throws ResourceLimitError("max_degree").
Poly delta_word(const PolyAutomaton& A, const Poly& p, const Word& w, const Limits& limits = {});

Rational coefficient(const PolyAutomaton& A, const Poly& p, const Word& w, const Limits& limits = {});

/// F(p).
Rational output(const PolyAutomaton& A, const Poly& p);

/// Throws ResourceLimitError("max_degree") when deg p exceeds the cap.
void check_degree(const Poly& p, const Limits& limits);

}  // namespace pprod
