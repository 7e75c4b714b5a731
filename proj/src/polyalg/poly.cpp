#include "pprod/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "pprod/errors.hpp"

namespace pprod {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::string name, unsigned exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(std::move(name), exponent);
    m.degree_ = exponent;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (auto& [name, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == name) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(std::move(name), e);
    }
    m.degree_ += e;
  }
  return m;
}

unsigned Monomial::exponent(const std::string& name) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), name,
                             [](const Factor& f, const std::string& n) { return f.first < n; });
  return it != factors_.end() && it->first == name ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto j = other.factors_.begin();
  for (const auto& [name, e] : factors_) {
    while (j != other.factors_.end() && j->first < name) ++j;
    if (j == other.factors_.end() || j->first != name || j->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<Factor> out;
  for (const auto& [name, e] : other.factors_) {
    const unsigned mine = exponent(name);
    if (e > mine) out.emplace_back(name, e - mine);
  }
  return from_factors(std::move(out));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<Factor> out = a.factors_;
  for (const auto& [name, e] : b.factors_) {
    const unsigned mine = a.exponent(name);
    if (e > mine) out.emplace_back(name, e - mine);
  }
  return from_factors(std::move(out));
}

bool Monomial::coprime_with(const Monomial& other) const {
  return std::none_of(factors_.begin(), factors_.end(),
                      [&](const Factor& f) { return other.exponent(f.first) > 0; });
}

Monomial Monomial::without_one(const std::string& name) const {
  std::vector<Factor> out = factors_;
  for (auto& f : out) {
    if (f.first == name) --f.second;
  }
  return from_factors(std::move(out));
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [name, e] : factors_) {
    if (!s.empty()) s += '*';
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ----------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(std::vector<std::string> precedence) : precedence_(std::move(precedence)) {
  for (std::size_t i = 0; i < precedence_.size(); ++i) ranks_.emplace(precedence_[i], i);
}

std::size_t MonomialOrder::rank(const std::string& name) const {
  auto it = ranks_.find(name);
  return it == ranks_.end() ? std::numeric_limits<std::size_t>::max() : it->second;
}

MonomialOrder MonomialOrder::extended_with(const std::set<std::string>& extra) const {
  std::vector<std::string> prec = precedence_;
  for (const auto& v : extra) {
    if (!ranks_.contains(v)) prec.push_back(v);
  }
  return MonomialOrder(std::move(prec));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // Key: declared variables by rank, undeclared after them by name.
  using Key = std::pair<std::size_t, std::string>;
  auto key = [&](const std::string& v) -> Key {
    const std::size_t r = rank(v);
    return r == std::numeric_limits<std::size_t>::max() ? Key{r, v} : Key{r, std::string()};
  };
  std::vector<std::pair<Key, std::string>> vars;
  for (const auto& f : a.factors()) vars.emplace_back(key(f.first), f.first);
  for (const auto& f : b.factors()) vars.emplace_back(key(f.first), f.first);
  std::sort(vars.begin(), vars.end(), std::greater<>());
  for (const auto& [k, v] : vars) {
    const unsigned ea = a.exponent(v);
    const unsigned eb = b.exponent(v);
    // Reverse lex: smaller exponent in the least variable wins.
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

Poly Poly::variable(const std::string& name) { return monomial(Monomial::variable(name)); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> vs;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) vs.insert(f.first);
  }
  return vs;
}

bool Poly::is_variable() const {
  return terms_.size() == 1 && terms_.begin()->first.degree() == 1 && terms_.begin()->second.is_one();
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Rational Poly::eval(const std::map<std::string, Rational>& assignment) const {
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [name, e] : m.factors()) {
      auto it = assignment.find(name);
      if (it == assignment.end()) throw UnassignedVariableError(name);
      v *= it->second.pow(e);
    }
    total += v;
  }
  return total;
}

Poly Poly::subst(const std::map<std::string, Poly>& images) const {
  Poly result;
  for (const auto& [m, c] : terms_) {
    Poly term(c);
    for (const auto& [name, e] : m.factors()) {
      auto it = images.find(name);
      if (it == images.end()) throw UnassignedVariableError(name);
      term = term * it->second.pow(e);
    }
    result += term;
  }
  return result;
}

Poly Poly::rename(const std::function<std::string(const std::string&)>& f) const {
  Poly result;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> factors;
    for (const auto& [name, e] : m.factors()) factors.emplace_back(f(name), e);
    result.add_term(Monomial::from_factors(std::move(factors)), c);
  }
  return result;
}

const Monomial& Poly::leading_monomial(const MonomialOrder& order) const {
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it) {
    if (order.greater(it->first, best->first)) best = it;
  }
  return best->first;
}

std::string Poly::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        os << '-';
        mag = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) mag = -c;
    }
    first = false;
    if (m.is_one()) {
      os << mag;
    } else if (mag.is_one()) {
      os << m.to_string();
    } else {
      os << mag << '*' << m.to_string();
    }
  }
  return os.str();
}

}  // namespace pprod
