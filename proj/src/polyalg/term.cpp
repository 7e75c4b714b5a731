#include "pprod/term.hpp"

#include <limits>
#include <unordered_set>

namespace pprod {

struct Term::Node {
  Kind kind = Kind::Zero;
  std::string name;
  Rational coeff;
  Term lhs;
  Term rhs;

  explicit Node(bool) : lhs(Term(nullptr)), rhs(Term(nullptr)) {}
};

// Every default-constructed term shares one node; its operand slots stay null.
Term::Term() {
  static const std::shared_ptr<const Node> zero = std::make_shared<Node>(true);
  node_ = zero;
}

Term Term::variable(std::string name) {
  auto n = std::make_shared<Node>(true);
  n->kind = Kind::Variable;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::scale(Rational c, Term u) {
  auto n = std::make_shared<Node>(true);
  n->kind = Kind::Scale;
  n->coeff = std::move(c);
  n->lhs = std::move(u);
  return Term(std::move(n));
}

Term Term::sum(Term u, Term v) {
  auto n = std::make_shared<Node>(true);
  n->kind = Kind::Sum;
  n->lhs = std::move(u);
  n->rhs = std::move(v);
  return Term(std::move(n));
}

Term Term::product(Term u, Term v) {
  auto n = std::make_shared<Node>(true);
  n->kind = Kind::Product;
  n->lhs = std::move(u);
  n->rhs = std::move(v);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Rational& Term::coefficient() const { return node_->coeff; }
const Term& Term::lhs() const { return node_->lhs; }
const Term& Term::rhs() const { return node_->rhs; }

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  return a > max - b ? max : a + b;
}

std::uint64_t tree_size_rec(const Term& t, std::unordered_map<const void*, std::uint64_t>& memo) {
  if (auto it = memo.find(t.id()); it != memo.end()) return it->second;
  std::uint64_t n = 1;
  switch (t.kind()) {
    case Term::Kind::Zero:
    case Term::Kind::Variable:
      break;
    case Term::Kind::Scale:
      n = saturating_add(n, tree_size_rec(t.lhs(), memo));
      break;
    case Term::Kind::Sum:
    case Term::Kind::Product:
      n = saturating_add(n, saturating_add(tree_size_rec(t.lhs(), memo), tree_size_rec(t.rhs(), memo)));
      break;
  }
  memo.emplace(t.id(), n);
  return n;
}

void collect(const Term& t, std::unordered_set<const void*>& seen, std::set<std::string>* vars) {
  if (!seen.insert(t.id()).second) return;
  switch (t.kind()) {
    case Term::Kind::Zero:
      break;
    case Term::Kind::Variable:
      if (vars != nullptr) vars->insert(t.name());
      break;
    case Term::Kind::Scale:
      collect(t.lhs(), seen, vars);
      break;
    case Term::Kind::Sum:
    case Term::Kind::Product:
      collect(t.lhs(), seen, vars);
      collect(t.rhs(), seen, vars);
      break;
  }
}

}  // namespace

std::uint64_t Term::tree_size() const {
  std::unordered_map<const void*, std::uint64_t> memo;
  return tree_size_rec(*this, memo);
}

std::uint64_t Term::dag_size() const {
  std::unordered_set<const void*> seen;
  collect(*this, seen, nullptr);
  return seen.size();
}

std::set<std::string> Term::variables() const {
  std::unordered_set<const void*> seen;
  std::set<std::string> vars;
  collect(*this, seen, &vars);
  return vars;
}

bool operator==(const Term& a, const Term& b) {
  if (a.id() == b.id()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Zero:
      return true;
    case Term::Kind::Variable:
      return a.name() == b.name();
    case Term::Kind::Scale:
      return a.coefficient() == b.coefficient() && a.lhs() == b.lhs();
    case Term::Kind::Sum:
    case Term::Kind::Product:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

// Printing mirrors the parser: sums are left-associative at expression level,
// products left-associative at term level, and a leading rational literal in a
// factor chain becomes the scalar of a Scale node.
namespace {

std::string print_expr(const Term& t);
std::string print_term(const Term& t);

std::string print_factor(const Term& t) {
  if (t.kind() == Term::Kind::Variable) return t.name();
  return "(" + print_expr(t) + ")";
}

std::string print_product(const Term& t) {
  const std::string left =
      t.lhs().kind() == Term::Kind::Product ? print_product(t.lhs()) : print_factor(t.lhs());
  return left + "*" + print_factor(t.rhs());
}

std::string print_chain(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return t.name();
    case Term::Kind::Product:
      return print_product(t);
    default:
      return "(" + print_expr(t) + ")";
  }
}

std::string print_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      return "0";
    case Term::Kind::Variable:
      return t.name();
    case Term::Kind::Scale:
      return t.coefficient().to_string() + "*" + print_chain(t.lhs());
    case Term::Kind::Sum:
      return "(" + print_expr(t) + ")";
    case Term::Kind::Product:
      return print_product(t);
  }
  return {};
}

std::string print_expr(const Term& t) {
  if (t.kind() != Term::Kind::Sum) return print_term(t);
  const Term& r = t.rhs();
  if (r.kind() == Term::Kind::Scale && r.coefficient() == Rational(-1)) {
    return print_expr(t.lhs()) + " - " + print_term(r.lhs());
  }
  return print_expr(t.lhs()) + " + " + print_term(r);
}

}  // namespace

std::string Term::to_string() const { return print_expr(*this); }

namespace {

Poly to_poly_rec(const Term& t, std::unordered_map<const void*, Poly>& memo) {
  if (auto it = memo.find(t.id()); it != memo.end()) return it->second;
  Poly p;
  switch (t.kind()) {
    case Term::Kind::Zero:
      break;
    case Term::Kind::Variable:
      p = Poly::variable(t.name());
      break;
    case Term::Kind::Scale:
      p = to_poly_rec(t.lhs(), memo) * t.coefficient();
      break;
    case Term::Kind::Sum:
      p = to_poly_rec(t.lhs(), memo) + to_poly_rec(t.rhs(), memo);
      break;
    case Term::Kind::Product:
      p = to_poly_rec(t.lhs(), memo) * to_poly_rec(t.rhs(), memo);
      break;
  }
  memo.emplace(t.id(), p);
  return p;
}

}  // namespace

Poly to_poly(const Term& t) {
  std::unordered_map<const void*, Poly> memo;
  return to_poly_rec(t, memo);
}

Term substitute(const Term& t, const std::map<std::string, Term>& images) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      return t;
    case Term::Kind::Variable: {
      auto it = images.find(t.name());
      return it == images.end() ? t : it->second;
    }
    case Term::Kind::Scale:
      return Term::scale(t.coefficient(), substitute(t.lhs(), images));
    case Term::Kind::Sum:
      return Term::sum(substitute(t.lhs(), images), substitute(t.rhs(), images));
    case Term::Kind::Product:
      return Term::product(substitute(t.lhs(), images), substitute(t.rhs(), images));
  }
  return t;
}

Term extend_term(const Term& rule, const std::function<Term(const std::string&)>& image, const Term& t,
                 ExtendCache* cache) {
  if (cache != nullptr) {
    if (auto it = cache->find(t.id()); it != cache->end()) return it->second;
  }
  Term out;
  switch (t.kind()) {
    case Term::Kind::Zero:
      break;
    case Term::Kind::Variable:
      out = image(t.name());
      break;
    case Term::Kind::Scale:
      out = Term::scale(t.coefficient(), extend_term(rule, image, t.lhs(), cache));
      break;
    case Term::Kind::Sum:
      out = Term::sum(extend_term(rule, image, t.lhs(), cache), extend_term(rule, image, t.rhs(), cache));
      break;
    case Term::Kind::Product: {
      Term du = extend_term(rule, image, t.lhs(), cache);
      Term dv = extend_term(rule, image, t.rhs(), cache);
      out = substitute(rule, {{"x", t.lhs()}, {"xd", std::move(du)}, {"y", t.rhs()}, {"yd", std::move(dv)}});
      break;
    }
  }
  if (cache != nullptr) cache->emplace(t.id(), out);
  return out;
}

}  // namespace pprod
