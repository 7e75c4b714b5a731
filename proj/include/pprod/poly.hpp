#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pprod/rational.hpp"

namespace pprod {

/// Power product of named, commuting variables. Factors are sorted by name and
/// never carry a zero exponent; the empty product is the constant monomial 1.
class Monomial {
public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  static Monomial variable(std::string name, unsigned exponent = 1);
  /// Builds from arbitrary factors; merges duplicates and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  bool is_one() const { return factors_.empty(); }
  unsigned degree() const { return degree_; }
  unsigned exponent(const std::string& name) const;
  const std::vector<Factor>& factors() const { return factors_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& other) const;
  /// Precondition: divides(other). Returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime_with(const Monomial& other) const;

  /// Splits off one copy of `name`; precondition: exponent(name) > 0.
  Monomial without_one(const std::string& name) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.factors_ <=> b.factors_;
  }

  /// "1", "x", "x^2*y".
  std::string to_string() const;

private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

/// Graded reverse lexicographic order. Variables listed in `precedence` rank
/// highest-first in that order; any other variable ranks below them, by name.
class MonomialOrder {
public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<std::string> precedence);

  const std::vector<std::string>& precedence() const { return precedence_; }
  std::size_t rank(const std::string& name) const;

  /// Returns a copy whose precedence also lists `extra` (appended by name) when absent.
  MonomialOrder extended_with(const std::set<std::string>& extra) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.precedence_ == b.precedence_;
  }

private:
  std::vector<std::string> precedence_;
  std::map<std::string, std::size_t> ranks_;
};

/// Sparse multivariate polynomial over Q in canonical form (no zero coefficients).
class Poly {
public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT
  Poly(std::int64_t constant) : Poly(Rational(constant)) {}  // NOLINT
  static Poly variable(const std::string& name);
  static Poly monomial(const Monomial& m, const Rational& c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  /// Total degree; 0 for the zero polynomial.
  unsigned degree() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial()); }
  bool has_constant_term() const { return !constant_term().is_zero(); }
  std::set<std::string> variables() const;
  bool is_variable() const;

  void add_term(const Monomial& m, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly pow(unsigned exponent) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Exact evaluation. Throws UnassignedVariableError naming the first missing variable.
  Rational eval(const std::map<std::string, Rational>& assignment) const;
  /// Homomorphic substitution. Throws UnassignedVariableError for uncovered variables.
  Poly subst(const std::map<std::string, Poly>& images) const;
  /// Renames variables; unmapped names are kept.
  Poly rename(const std::function<std::string(const std::string&)>& f) const;

  /// Leading monomial under `order`; precondition: nonzero.
  const Monomial& leading_monomial(const MonomialOrder& order) const;

  /// Human/parser-compatible text, terms sorted descending by `order`.
  std::string to_string(const MonomialOrder& order = MonomialOrder()) const;

private:
  Terms terms_;
};

inline Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }
inline Rational poly_eval(const Poly& p, const std::map<std::string, Rational>& assignment) {
  return p.eval(assignment);
}
inline Poly poly_subst(const Poly& p, const std::map<std::string, Poly>& images) {
  return p.subst(images);
}

}  // namespace pprod
