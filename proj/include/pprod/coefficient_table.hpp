#pragma once

#include <optional>
#include <vector>

#include "pprod/limits.hpp"
#include "pprod/poly_automaton.hpp"

namespace pprod {

/// Σ^{≤L} in length-lex order, letters ordered as in the alphabet.
std::vector<Word> words_upto(const std::vector<std::string>& alphabet, unsigned max_length);

/// Number of words of length at most L over k letters. Throws ResourceLimitError on overflow.
std::uint64_t count_words_upto(std::size_t letters, unsigned max_length);

struct CoefficientTable {
  std::vector<Word> words;      // length-lex
  std::vector<Rational> values;  // values[i] = ⟦words[i]⟧

  /// Index of the first nonzero value.
  std::optional<std::size_t> first_nonzero() const;
};

/// Every coefficient of p up to length L, reusing Δ_u p for each prefix u.
/// Each level is expanded in parallel with OpenMP when available.
CoefficientTable coefficient_table(const PolyAutomaton& A, const Poly& p, unsigned max_length,
                                   const Limits& limits = {});

/// Same table, computed sequentially. Reference for tests and benchmarks.
CoefficientTable coefficient_table_serial(const PolyAutomaton& A, const Poly& p, unsigned max_length,
                                          const Limits& limits = {});

/// Threads the parallel kernel will use (1 without OpenMP).
int coefficient_table_threads();

}  // namespace pprod
