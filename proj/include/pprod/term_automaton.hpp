#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "pprod/limits.hpp"
#include "pprod/rational.hpp"
#include "pprod/rules.hpp"
#include "pprod/term.hpp"

namespace pprod {

/// A word is a sequence of letters; letters may be longer than one character.
using Word = std::vector<std::string>;

/// ⟨X, F, Δ⟩ over free terms. Missing transitions are the zero term.
struct TermAutomaton {
  std::vector<std::string> alphabet;
  std::vector<std::string> variables;
  ProductRule rule;
  std::map<std::string, Rational> output;
  std::map<std::string, std::map<std::string, Term>> transitions;  // letter -> variable -> term

  bool has_letter(const std::string& a) const;
  bool has_variable(const std::string& v) const;
  const Term& transition(const std::string& letter, const std::string& variable) const;
  void set_transition(const std::string& letter, const std::string& variable, Term t);

  /// Throws SchemaError on duplicate/unknown names, missing outputs or
  /// transitions that mention undeclared variables.
  void validate() const;
};

/// An automaton together with the term whose series it denotes.
struct PointedTermAutomaton {
  TermAutomaton automaton;
  Term initial;
};

/// Throws SchemaError unless every variable of t is declared in A.
void check_scoped(const TermAutomaton& A, const Term& t);

/// D̃_letter t by structural recursion; no normalization.
Term p_extend(const TermAutomaton& A, const std::string& letter, const Term& t, ExtendCache* cache = nullptr);

/// F extended homomorphically to terms.
Rational output(const TermAutomaton& A, const Term& t);

struct TermOptions {
  std::uint64_t max_term_nodes = 1'000'000;
  /// Reuse extensions of shared subterms; the cap then applies to DAG size.
  bool share = true;
  Deadline deadline;
  static TermOptions from(const Limits& limits) { return {limits.max_term_nodes, true, Deadline::from(limits)}; }
};

/// Δ_w t, letters applied first to last. Throws ResourceLimitError("max_term_nodes").
Term extend_word(const TermAutomaton& A, const Term& t, const Word& w, const TermOptions& options = {});

/// ⟦w⟧ of t: F(Δ_w t).
Rational coefficient(const TermAutomaton& A, const Term& t, const Word& w, const TermOptions& options = {});

struct CombineOp {
  enum class Kind { Sum, Scale, Product, LeftDerivative };
  Kind kind;
  Rational scalar;     // Scale
  std::string letter;  // LeftDerivative

  static CombineOp sum() { return {Kind::Sum, {}, {}}; }
  static CombineOp scale(Rational c) { return {Kind::Scale, std::move(c), {}}; }
  static CombineOp product() { return {Kind::Product, {}, {}}; }
  static CombineOp left_derivative(std::string a) { return {Kind::LeftDerivative, {}, std::move(a)}; }
};

/// Sum and product take two inputs, whose variables are renamed with prefixes
/// "l." and "r."; scale and left-derivative take one and keep its names.
/// Throws SchemaError on an arity, alphabet or rule mismatch.
PointedTermAutomaton closure_combine(const CombineOp& op, std::span<const PointedTermAutomaton> inputs);

/// g with F g = c and Δ_a g = initial term of family[a]. Member k of the
/// alphabet contributes its variables under prefix "i<k>."; g is named "g".
PointedTermAutomaton antiderivative(const std::map<std::string, PointedTermAutomaton>& family, const Rational& c);

/// Renames every variable of A (and of t) with `prefix`.
PointedTermAutomaton prefixed(const PointedTermAutomaton& p, const std::string& prefix);

}  // namespace pprod
