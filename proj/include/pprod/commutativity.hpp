#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pprod/poly_automaton.hpp"
#include "pprod/zeroness.hpp"

namespace pprod {

/// A extended with x^{Rb} for every x, spelled "R<k>.x" with k the index of b.
struct RightDerivative {
  PolyAutomaton automaton;
  std::string letter;
  std::map<std::string, std::string> renaming;  // x -> R<k>.x

  /// ∂p, the polynomial whose series is δ^R_b of p's.
  Poly apply(const Poly& p) const;
};

RightDerivative right_derivative_automaton(const PolyAutomaton& A, const std::string& letter);

struct CommutativityResult {
  bool commutative = true;
  /// Two words with the same letters and different coefficients.
  std::optional<std::pair<Word, Word>> witness_words;
  std::optional<std::pair<Rational, Rational>> witness_values;
  /// Certificate of the first failing check.
  std::optional<ZeronessCertificate> failing;
  std::string failing_check;  // "swap a b" or "right a"
  unsigned checks_run = 0;
};

/// δ_aδ_b f = δ_bδ_a f for all a < b, and δ_a f = δ^R_a f for all a.
CommutativityResult is_commutative(const PolyAutomaton& A, const Poly& p, const ZeronessOptions& options = {});

/// g over Σ ∪ {a⁺, b⁺} with ⟦a⁺b⁺w⟧ g = ⟦w⟧ p and every other prefix mapped to 0,
/// so g is commutative exactly when p denotes the zero series.
PointedPolyAutomaton equivalence_to_commutativity(const PolyAutomaton& A, const Poly& p,
                                                  const std::string& fresh_a = "#a",
                                                  const std::string& fresh_b = "#b");

}  // namespace pprod
