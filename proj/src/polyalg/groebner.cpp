#include "pprod/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "pprod/errors.hpp"

namespace pprod {
namespace {

using Exps = std::vector<std::uint32_t>;

struct DTerm {
  Exps e;
  unsigned deg = 0;
  Rational c;
};

// Terms strictly descending in grevlex.
using DPoly = std::vector<DTerm>;

int grevlex(const DTerm& a, const DTerm& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (std::size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

class DenseRing {
public:
  explicit DenseRing(const MonomialOrder& order) : order_(order) {
    for (std::size_t i = 0; i < order.precedence().size(); ++i) index_.emplace(order.precedence()[i], i);
  }

  std::size_t size() const { return order_.precedence().size(); }

  DPoly to_dense(const Poly& p) const {
    DPoly out;
    out.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
      DTerm t{Exps(size(), 0), m.degree(), c};
      for (const auto& [name, e] : m.factors()) t.e[index_.at(name)] = e;
      out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const DTerm& a, const DTerm& b) { return grevlex(a, b) > 0; });
    return out;
  }

  Poly to_poly(const DPoly& d) const {
    Poly p;
    for (const auto& t : d) {
      std::vector<Monomial::Factor> f;
      for (std::size_t i = 0; i < t.e.size(); ++i) {
        if (t.e[i] > 0) f.emplace_back(order_.precedence()[i], t.e[i]);
      }
      p.add_term(Monomial::from_factors(std::move(f)), t.c);
    }
    return p;
  }

private:
  const MonomialOrder& order_;
  std::map<std::string, std::size_t> index_;
};

// p[from..] - c * x^shift * g, merged in order.
DPoly sub_scaled(const DPoly& p, std::size_t from, const Rational& c, const Exps& shift, unsigned shift_deg,
                 const DPoly& g) {
  DPoly out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from;
  std::size_t j = 0;
  auto shifted = [&](const DTerm& t) {
    DTerm s{t.e, t.deg + shift_deg, -(c * t.c)};
    for (std::size_t k = 0; k < s.e.size(); ++k) s.e[k] += shift[k];
    return s;
  };
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    DTerm s = shifted(g[j]);
    if (i == p.size()) {
      out.push_back(std::move(s));
      ++j;
      continue;
    }
    const int cmp = grevlex(p[i], s);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(s));
      ++j;
    } else {
      Rational sum = p[i].c + s.c;
      if (!sum.is_zero()) out.push_back(DTerm{p[i].e, p[i].deg, std::move(sum)});
      ++i;
      ++j;
    }
  }
  return out;
}

Exps exps_minus(const Exps& a, const Exps& b) {
  Exps out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

unsigned exps_degree(const Exps& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

// Full normal form of p modulo basis (first divisor in list order wins).
DPoly normal_form(DPoly p, const std::vector<const DPoly*>& basis) {
  DPoly rem;
  std::size_t start = 0;
  while (start < p.size()) {
    const DTerm& lt = p[start];
    const DPoly* divisor = nullptr;
    for (const DPoly* g : basis) {
      if (!g->empty() && divides(g->front().e, lt.e)) {
        divisor = g;
        break;
      }
    }
    if (divisor == nullptr) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    const Exps shift = exps_minus(lt.e, divisor->front().e);
    const Rational factor = lt.c / divisor->front().c;
    p = sub_scaled(p, start, factor, shift, exps_degree(shift), *divisor);
    start = 0;
  }
  return rem;
}

void make_monic(DPoly& p) {
  if (p.empty() || p.front().c.is_one()) return;
  const Rational inv = Rational(1) / p.front().c;
  for (auto& t : p) t.c *= inv;
}

unsigned dense_degree(const DPoly& p) {
  unsigned d = 0;
  for (const auto& t : p) d = std::max(d, t.deg);
  return d;
}

MonomialOrder materialize(const MonomialOrder& order, std::span<const Poly> polys) {
  std::set<std::string> vars;
  for (const auto& p : polys) {
    auto vs = p.variables();
    vars.insert(vs.begin(), vs.end());
  }
  return order.extended_with(vars);
}

class Buchberger {
public:
  explicit Buchberger(const GroebnerOptions& options) : options_(options) {}

  // Seeds an already-complete basis: all pairs among these count as processed.
  void seed(std::vector<DPoly> basis) {
    for (auto& g : basis) basis_.push_back(std::move(g));
  }

  void add(DPoly h) {
    std::vector<const DPoly*> view = pointers();
    h = normal_form(std::move(h), view);
    if (h.empty()) return;
    insert(std::move(h));
  }

  void run() {
    while (!pending_.empty()) {
      options_.deadline.check("buchberger");
      if (++processed_ > options_.max_pairs) {
        throw ResourceLimitError("max_pairs", "more than " + std::to_string(options_.max_pairs) + " S-pairs");
      }
      const auto it = select();
      const auto [i, j] = it->second;
      pending_.erase(it);
      if (criterion_applies(i, j)) continue;
      DPoly s = s_polynomial(i, j);
      s = normal_form(std::move(s), pointers());
      if (!s.empty()) insert(std::move(s));
    }
  }

  std::vector<DPoly> reduced() const {
    std::vector<DPoly> sorted = basis_;
    std::sort(sorted.begin(), sorted.end(),
              [](const DPoly& a, const DPoly& b) { return grevlex(a.front(), b.front()) < 0; });
    std::vector<DPoly> minimal;
    for (auto& g : sorted) {
      const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                         [&](const DPoly& m) { return divides(m.front().e, g.front().e); });
      if (!redundant) minimal.push_back(std::move(g));
    }
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const DPoly*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.push_back(&minimal[l]);
      }
      DPoly head{minimal[k].front()};
      DPoly tail(minimal[k].begin() + 1, minimal[k].end());
      tail = normal_form(std::move(tail), others);
      head.insert(head.end(), tail.begin(), tail.end());
      make_monic(head);
      minimal[k] = std::move(head);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const DPoly& a, const DPoly& b) { return grevlex(a.front(), b.front()) > 0; });
    return minimal;
  }

private:
  using Pair = std::pair<std::size_t, std::size_t>;
  struct PairKey {
    DTerm lcm;
    Pair pair;
    bool operator<(const PairKey& o) const {
      const int c = grevlex(lcm, o.lcm);
      if (c != 0) return c < 0;
      return pair < o.pair;
    }
  };

  std::vector<const DPoly*> pointers() const {
    std::vector<const DPoly*> v;
    v.reserve(basis_.size());
    for (const auto& g : basis_) v.push_back(&g);
    return v;
  }

  DTerm lcm_of(std::size_t i, std::size_t j) const {
    const Exps& a = basis_[i].front().e;
    const Exps& b = basis_[j].front().e;
    DTerm t{Exps(a.size()), 0, Rational(1)};
    for (std::size_t k = 0; k < a.size(); ++k) {
      t.e[k] = std::max(a[k], b[k]);
      t.deg += t.e[k];
    }
    return t;
  }

  void insert(DPoly h) {
    make_monic(h);
    if (dense_degree(h) > options_.max_degree) {
      throw ResourceLimitError("max_degree", "basis element of degree " + std::to_string(dense_degree(h)) +
                                                 " exceeds " + std::to_string(options_.max_degree));
    }
    const std::size_t k = basis_.size();
    basis_.push_back(std::move(h));
    for (std::size_t i = 0; i < k; ++i) {
      PairKey key{lcm_of(i, k), {i, k}};
      index_.emplace(Pair{i, k}, key);
      pending_.emplace(std::move(key), Pair{i, k});
    }
  }

  std::map<PairKey, Pair>::iterator select() { return pending_.begin(); }

  bool is_pending(std::size_t a, std::size_t b) const {
    const Pair p = a < b ? Pair{a, b} : Pair{b, a};
    auto it = index_.find(p);
    return it != index_.end() && pending_.contains(it->second);
  }

  bool criterion_applies(std::size_t i, std::size_t j) const {
    const Exps& a = basis_[i].front().e;
    const Exps& b = basis_[j].front().e;
    bool coprime = true;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] > 0 && b[k] > 0) {
        coprime = false;
        break;
      }
    }
    if (coprime) return true;
    const DTerm l = lcm_of(i, j);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == i || k == j) continue;
      if (divides(basis_[k].front().e, l.e) && !is_pending(i, k) && !is_pending(j, k)) return true;
    }
    return false;
  }

  DPoly s_polynomial(std::size_t i, std::size_t j) const {
    const DTerm l = lcm_of(i, j);
    const DPoly& f = basis_[i];
    const DPoly& g = basis_[j];
    const Exps sf = exps_minus(l.e, f.front().e);
    const Exps sg = exps_minus(l.e, g.front().e);
    // (l / LT f) f, then subtract (l / LT g) g; both monic.
    DPoly scaled_f = sub_scaled(DPoly{}, 0, Rational(-1), sf, exps_degree(sf), f);
    return sub_scaled(scaled_f, 0, Rational(1), sg, exps_degree(sg), g);
  }

  const GroebnerOptions& options_;
  std::vector<DPoly> basis_;
  std::map<PairKey, Pair> pending_;
  std::map<Pair, PairKey> index_;
  std::uint64_t processed_ = 0;
};

GroebnerBasis finish(const DenseRing& ring, const MonomialOrder& order, const Buchberger& engine) {
  GroebnerBasis gb{order, {}};
  for (const auto& g : engine.reduced()) gb.generators.push_back(ring.to_poly(g));
  return gb;
}

}  // namespace

Poly reduce(const Poly& p, std::span<const Poly> basis, const MonomialOrder& order) {
  std::vector<Poly> all(basis.begin(), basis.end());
  all.push_back(p);
  const MonomialOrder full = materialize(order, all);
  const DenseRing ring(full);
  std::vector<DPoly> dense;
  dense.reserve(basis.size());
  for (const auto& g : basis) dense.push_back(ring.to_dense(g));
  std::vector<const DPoly*> view;
  for (const auto& g : dense) view.push_back(&g);
  return ring.to_poly(normal_form(ring.to_dense(p), view));
}

GroebnerBasis buchberger(std::span<const Poly> gens, const MonomialOrder& order, const GroebnerOptions& options) {
  const MonomialOrder full = materialize(order, gens);
  const DenseRing ring(full);
  Buchberger engine(options);
  for (const auto& g : gens) {
    if (g.degree() > options.max_degree) {
      throw ResourceLimitError("max_degree", "generator of degree " + std::to_string(g.degree()));
    }
    engine.add(ring.to_dense(g));
  }
  engine.run();
  return finish(ring, full, engine);
}

GroebnerBasis extend_basis(const GroebnerBasis& gb, std::span<const Poly> extra, const GroebnerOptions& options) {
  const MonomialOrder full = materialize(gb.order, extra);
  const DenseRing ring(full);
  Buchberger engine(options);
  std::vector<DPoly> seeded;
  for (const auto& g : gb.generators) seeded.push_back(ring.to_dense(g));
  engine.seed(std::move(seeded));
  for (const auto& g : extra) {
    if (g.degree() > options.max_degree) {
      throw ResourceLimitError("max_degree", "generator of degree " + std::to_string(g.degree()));
    }
    engine.add(ring.to_dense(g));
  }
  engine.run();
  return finish(ring, full, engine);
}

bool ideal_member(const Poly& p, const GroebnerBasis& gb) {
  return reduce(p, gb.generators, gb.order).is_zero();
}

bool ideal_equal(const GroebnerBasis& gb, std::span<const Poly> gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const Poly& g) { return ideal_member(g, gb); });
}

bool is_reduced_basis(const GroebnerBasis& gb) {
  std::vector<Monomial> leads;
  for (const auto& g : gb.generators) {
    if (g.is_zero()) return false;
    const Monomial& lm = g.leading_monomial(gb.order);
    if (!g.coefficient(lm).is_one()) return false;
    leads.push_back(lm);
  }
  for (std::size_t i = 0; i < gb.generators.size(); ++i) {
    for (std::size_t j = 0; j < gb.generators.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : gb.generators[j].terms()) {
        if (leads[i].divides(m)) return false;
      }
    }
  }
  for (std::size_t i = 1; i < leads.size(); ++i) {
    if (!gb.order.greater(leads[i - 1], leads[i])) return false;
  }
  return true;
}

}  // namespace pprod
