#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>

#include "pprod/poly.hpp"
#include "pprod/rational.hpp"

namespace pprod {

/// Free term over named variables: 0 | x | c·u | u + v | u ∗ v.
/// Immutable and shared; no identities hold between distinct shapes.
class Term {
public:
  enum class Kind { Zero, Variable, Scale, Sum, Product };

  Term();  // the zero term
  static Term zero() { return Term(); }
  static Term variable(std::string name);
  static Term scale(Rational c, Term u);
  static Term sum(Term u, Term v);
  static Term product(Term u, Term v);

  Kind kind() const;
  bool is_zero() const { return kind() == Kind::Zero; }
  /// Variable name; empty unless kind() == Variable.
  const std::string& name() const;
  /// Scalar of a Scale node.
  const Rational& coefficient() const;
  /// Operand of Scale (lhs only), Sum and Product.
  const Term& lhs() const;
  const Term& rhs() const;

  /// Identity of the shared node (stable while any handle is alive).
  const void* id() const { return node_.get(); }

  /// Number of nodes in the tree, counting shared subterms with multiplicity.
  /// Saturates at UINT64_MAX.
  std::uint64_t tree_size() const;
  /// Number of distinct shared nodes.
  std::uint64_t dag_size() const;
  std::set<std::string> variables() const;

  /// Structural equality.
  friend bool operator==(const Term& a, const Term& b);

  /// Text in the shared expression grammar; parse_term(to_string()) rebuilds this tree.
  std::string to_string() const;

private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// BAC normal form: the polynomial a term denotes in a commutative algebra.
Poly to_poly(const Term& t);

/// Simultaneous substitution of variables by terms; unmapped variables stay.
Term substitute(const Term& t, const std::map<std::string, Term>& images);

/// Memo for term-level extension, keyed by node identity. Per invocation only.
using ExtendCache = std::unordered_map<const void*, Term>;

/// Term-level P-extension of a variable map: linear on 0, c·u, u+v; variables
/// through `image`; u∗v ↦ rule[x:=u, xd:=D̃u, y:=v, yd:=D̃v]. No normalization.
Term extend_term(const Term& rule, const std::function<Term(const std::string&)>& image, const Term& t,
                 ExtendCache* cache = nullptr);

}  // namespace pprod
