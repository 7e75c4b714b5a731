#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pprod/commutativity.hpp"
#include "pprod/poly_automaton.hpp"
#include "pprod/term_automaton.hpp"
#include "pprod/zeroness.hpp"

namespace pprod {

/// An automaton JSON document:
///   {"alphabet": [...], "rule": "<expr or preset>", "variables": [...],
///    "output": {"x": "p/q"}, "transitions": {"a": {"x": "<expr>"}},
///    "initial": "<expr>", "kind": "term" | "poly"}
/// Missing transitions are 0, kind defaults to "poly", initial to the first variable.
struct AutomatonDocument {
  enum class Kind { Term, Poly };
  Kind kind = Kind::Poly;
  std::string rule;  // as written: preset name or expression
  PointedTermAutomaton term;  // Kind::Term
  PointedPolyAutomaton poly;  // Kind::Poly

  const std::vector<std::string>& alphabet() const;
  /// Polynomial view; term documents are quotiented (PreconditionError unless special).
  PointedPolyAutomaton as_poly() const;
  /// Term view; polynomial documents are read back as terms.
  PointedTermAutomaton as_term() const;
};

/// Throws ParseError (malformed JSON or expressions), SchemaError (shape),
/// PreconditionError (poly document with a non-special rule).
AutomatonDocument parse_automaton(std::string_view json_text);
AutomatonDocument load_automaton(const std::string& path);

/// Pretty-printed, keys sorted; parse_automaton of the result rebuilds the document.
std::string serialize_automaton(const AutomatonDocument& doc);

/// "" and "ε" are the empty word; concatenated letters when every letter is one
/// character, otherwise space-separated. Throws SchemaError on unknown letters.
Word parse_word(const std::vector<std::string>& alphabet, std::string_view text);
std::string format_word(const std::vector<std::string>& alphabet, const Word& w);

std::string certificate_json(const ZeronessCertificate& cert, const std::vector<std::string>& alphabet,
                             const MonomialOrder& order);
/// Certificate-shaped report for a run stopped by a resource limit.
std::string limit_hit_json(const std::string& limit);
std::string commutativity_json(const CommutativityResult& r, const std::vector<std::string>& alphabet,
                               const MonomialOrder& order);

}  // namespace pprod
