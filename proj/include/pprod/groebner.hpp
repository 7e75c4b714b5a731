#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pprod/limits.hpp"
#include "pprod/poly.hpp"

namespace pprod {

/// Reduced Gröbner basis: monic generators, none of whose leading monomials
/// divides a monomial of another, listed by descending leading monomial.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Poly> generators;

  bool is_zero_ideal() const { return generators.empty(); }
  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

struct GroebnerOptions {
  unsigned max_degree = 64;
  std::uint64_t max_pairs = 200'000;
  Deadline deadline;

  static GroebnerOptions from(const Limits& limits) {
    return {limits.max_degree, limits.max_pairs, Deadline::from(limits)};
  }
};

/// Multivariate division normal form: p - r lies in <basis> and no monomial of r
/// is divisible by a leading monomial of basis. Divisors are tried in list order.
Poly reduce(const Poly& p, std::span<const Poly> basis, const MonomialOrder& order = MonomialOrder());

/// Buchberger with normal selection and both pair criteria, followed by
/// interreduction. Variables missing from `order` rank below it by name.
GroebnerBasis buchberger(std::span<const Poly> gens, const MonomialOrder& order = MonomialOrder(),
                         const GroebnerOptions& options = {});

/// Basis of <gb ∪ extra>, reusing gb's already-processed pairs.
GroebnerBasis extend_basis(const GroebnerBasis& gb, std::span<const Poly> extra,
                           const GroebnerOptions& options = {});

bool ideal_member(const Poly& p, const GroebnerBasis& gb);

/// True iff <gb ∪ gens> = <gb>.
bool ideal_equal(const GroebnerBasis& gb, std::span<const Poly> gens);

/// Structural check of the reduced-basis invariants (monic, interreduced).
bool is_reduced_basis(const GroebnerBasis& gb);

}  // namespace pprod
