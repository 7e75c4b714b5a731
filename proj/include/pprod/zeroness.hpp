#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pprod/groebner.hpp"
#include "pprod/limits.hpp"
#include "pprod/poly_automaton.hpp"

namespace pprod {

struct ZeronessOptions {
  Limits limits;
  /// Only derive generators that were new at the previous level.
  bool prune = true;
  /// Require the initial polynomial to be a single declared variable.
  bool strict_initial = false;
  /// Compute one extra level past N and check the chain laws.
  bool verify_chain = false;
};

struct ZeronessCertificate {
  bool verdict = false;
  unsigned N = 0;
  std::vector<std::pair<Word, Poly>> generators;  // words whose Δ_w p0 enlarged the ideal
  std::optional<std::pair<Word, Rational>> witness;
  std::uint64_t words_checked = 0;
  std::vector<std::string> limits_hit;
  /// Reduced basis of I_N.
  GroebnerBasis basis;
};

/// Decides ⟦p0⟧ = 0 by saturating I_n = ⟨Δ_w p0 : |w| ≤ n⟩.
ZeronessCertificate zeroness(const PolyAutomaton& A, const Poly& p0, const ZeronessOptions& options = {});

/// Variables of A and B prefixed "l." and "r."; alphabets must agree as sets.
PolyAutomaton disjoint_union(const PolyAutomaton& A, const PolyAutomaton& B);

/// ⟦p⟧_A = ⟦q⟧_B via zeroness of p − q over the disjoint union.
ZeronessCertificate equivalence(const PolyAutomaton& A, const Poly& p, const PolyAutomaton& B, const Poly& q,
                                const ZeronessOptions& options = {});

}  // namespace pprod
