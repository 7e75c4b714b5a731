#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pprod/poly.hpp"
#include "pprod/rational.hpp"

namespace pprod::testkit {

/// Deterministic generators for property tests.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(int bound = 5) {
    const int num = integer(-bound, bound);
    const int den = integer(1, 3);
    return Rational(num, den);
  }

  Rational nonzero_rational(int bound = 5) {
    Rational r;
    while (r.is_zero()) r = rational(bound);
    return r;
  }

  /// Random polynomial with up to `terms` terms over `vars`, total degree <= max_degree.
  Poly poly(const std::vector<std::string>& vars, unsigned max_degree, int terms, bool constant_term = true) {
    Poly p;
    for (int t = 0; t < terms; ++t) {
      std::vector<Monomial::Factor> f;
      unsigned budget = static_cast<unsigned>(integer(constant_term ? 0 : 1, static_cast<int>(max_degree)));
      while (budget > 0) {
        const auto& v = vars[static_cast<std::size_t>(integer(0, static_cast<int>(vars.size()) - 1))];
        f.emplace_back(v, 1);
        --budget;
      }
      p.add_term(Monomial::from_factors(std::move(f)), nonzero_rational());
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace pprod::testkit
