#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pprod/poly.hpp"
#include "pprod/rational.hpp"
#include "pprod/term.hpp"

namespace pprod {

/// Reserved rule variables: x, ẋ, y, ẏ spelled in ASCII.
inline constexpr const char* kRuleX = "x";
inline constexpr const char* kRuleXd = "xd";
inline constexpr const char* kRuleY = "y";
inline constexpr const char* kRuleYd = "yd";

/// α·xy + β·(x·yd + xd·y) + γ·xd·yd.
struct SimpleForm {
  Rational alpha;
  Rational beta;
  Rational gamma;
  friend bool operator==(const SimpleForm&, const SimpleForm&) = default;
  std::string to_string() const;  // "(α, β, γ)"
};

/// Coefficients of a rule read as α·xy + β1·x·yd + β2·xd·y + γ·xd·yd, and
/// the four associativity identities of that bilinear family, individually.
struct BilinearDiagnostics {
  bool bilinear = false;  // no monomials outside the four above
  Rational alpha, beta1, beta2, gamma;
  bool alpha_balanced = false;   // α(β1 − β2) = 0
  bool gamma_balanced = false;   // γ(β1 − β2) = 0
  bool beta1_quadratic = false;  // αγ = β1(β1 − 1)
  bool beta2_quadratic = false;  // αγ = β2(β2 − 1)
};

struct SpecialityReport {
  bool add_ok = false;
  bool assoc_ok = false;
  bool comm_ok = false;
  std::optional<SimpleForm> simple;
  std::optional<Rational> unit_eta;
  /// First nonzero difference polynomial, in P-add, P-assoc, P-comm order.
  std::optional<Poly> failing_identity;
  /// Names of every failing identity ("P-add", "P-assoc", "P-comm").
  std::vector<std::string> failing;

  bool special() const { return add_ok && assoc_ok && comm_ok; }
};

struct ProductRule {
  Term source;
  Poly normal_form;
  SpecialityReport speciality;

  static ProductRule from_term(Term source);
  /// Preset name or expression text.
  static ProductRule parse(std::string_view text);
};

/// Expression text for a preset name, or nullopt.
std::optional<std::string> rule_preset(std::string_view name);

/// Parses an expression (or preset) over {x, xd, y, yd}.
/// Throws ParseError; foreign variables raise SchemaError.
Term parse_rule(std::string_view text);

Poly rule_to_poly(const Term& rule);

SpecialityReport check_special(const Poly& rule);

std::optional<SimpleForm> classify_simple(const Poly& rule);
BilinearDiagnostics bilinear_diagnostics(const Poly& rule);

/// η with δ_a 𝟙 = η·𝟙; absent for the degenerate β = γ = 0.
std::optional<Rational> multiplicative_unit(const SimpleForm& simple);

/// Every monomial mentions y or yd.
bool ideal_compatible(const Poly& rule);

/// Δ^R∘Δ^L and Δ^L∘Δ^R agree on x∗y (term level, compared as polynomials).
/// Throws PreconditionError unless the rule is special.
bool check_reversal_commutation(const Poly& rule);

/// Normal forms of Δ^R_b Δ^L_a (x∗y) and Δ^L_a Δ^R_b (x∗y) over
/// {x, Lx, Rx, LRx, y, Ly, Ry, LRy}. No speciality precondition.
std::pair<Poly, Poly> reversal_sides(const Poly& rule);

/// Difference polynomials of the three identities, over x, xd, y, yd, z, zd.
Poly p_add_difference(const Poly& rule);
Poly p_assoc_difference(const Poly& rule);
Poly p_comm_difference(const Poly& rule);

/// Substitutes P(a, ad, b, bd).
Poly apply_rule(const Poly& rule, const Poly& a, const Poly& ad, const Poly& b, const Poly& bd);

}  // namespace pprod
