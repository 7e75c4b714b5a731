#include "pprod/zeroness.hpp"

#include <set>
#include <stdexcept>

#include "pprod/coefficient_table.hpp"
#include "pprod/errors.hpp"

namespace pprod {
namespace {

struct Candidate {
  Word word;
  Poly poly;
};

class Saturation {
public:
  Saturation(const PolyAutomaton& A, const ZeronessOptions& options)
      : A_(A), options_(options), groebner_(GroebnerOptions::from(options.limits)) {
    basis_.order = A.order();
  }

  // Adds the candidates that enlarge the ideal; returns them.
  std::vector<Candidate> admit(std::vector<Candidate> candidates, ZeronessCertificate& cert) {
    std::vector<Candidate> kept;
    for (auto& c : candidates) {
      groebner_.deadline.check("zeroness");
      if (c.poly.is_zero() || reduce(c.poly, basis_.generators, basis_.order).is_zero()) continue;
      basis_ = extend_basis(basis_, std::span(&c.poly, 1), groebner_);
      cert.generators.emplace_back(c.word, c.poly);
      kept.push_back(std::move(c));
    }
    return kept;
  }

  std::vector<Candidate> derive(const std::vector<Candidate>& from) const {
    std::vector<Candidate> out;
    for (const auto& c : from)
      for (const auto& a : A_.alphabet) {
        Word w = c.word;
        w.push_back(a);
        Poly d = delta_extend(A_, a, c.poly);
        check_degree(d, options_.limits);
        out.push_back({std::move(w), std::move(d)});
      }
    return out;
  }

  bool all_members(const std::vector<Candidate>& cs) const {
    for (const auto& c : cs)
      if (!ideal_member(c.poly, basis_)) return false;
    return true;
  }

  const GroebnerBasis& basis() const { return basis_; }

private:
  const PolyAutomaton& A_;
  const ZeronessOptions& options_;
  GroebnerOptions groebner_;
  GroebnerBasis basis_;
};

void require_single_variable(const PolyAutomaton& A, const Poly& p) {
  if (!p.is_variable())
    throw PreconditionError("--strict-initial needs a single variable, got " + p.to_string(A.order()));
}

void level_cap(unsigned level, const ZeronessOptions& options) {
  if (level > options.limits.max_ideal_levels)
    throw ResourceLimitError("max_ideal_levels", "ideal chain still growing at level " + std::to_string(level));
}

}  // namespace

ZeronessCertificate zeroness(const PolyAutomaton& A, const Poly& p0, const ZeronessOptions& options) {
  A.validate();
  check_initial(A, p0);
  if (options.strict_initial) require_single_variable(A, p0);

  ZeronessCertificate cert;
  Saturation chain(A, options);
  std::vector<Candidate> frontier = chain.admit({{Word{}, p0}}, cert);
  unsigned N = 0;

  if (options.prune) {
    for (unsigned level = 1; !frontier.empty(); ++level) {
      level_cap(level, options);
      frontier = chain.admit(chain.derive(frontier), cert);
      if (!frontier.empty()) N = level;
    }
  } else {
    // Literal chain: every word of the level, stop at the first n with I_{n+1} = I_n.
    std::vector<Candidate> all{{Word{}, p0}};
    for (unsigned level = 1;; ++level) {
      level_cap(level, options);
      all = chain.derive(all);
      if (chain.all_members(all)) break;
      const GroebnerBasis before = chain.basis();
      chain.admit(all, cert);
      for (const auto& g : before.generators)
        if (!ideal_member(g, chain.basis())) throw std::logic_error("ideal chain is not increasing");
      N = level;
    }
  }

  if (options.verify_chain) {
    // Past N the chain must stay put for one more level from every word.
    std::vector<Candidate> words{{Word{}, p0}};
    for (unsigned level = 0; level <= N; ++level) words = chain.derive(words);
    if (!chain.all_members(words)) throw std::logic_error("ideal chain did not stabilize at N");
  }

  const CoefficientTable table = coefficient_table(A, p0, N, options.limits);
  cert.N = N;
  cert.words_checked = table.words.size();
  cert.basis = chain.basis();
  if (const auto i = table.first_nonzero()) {
    cert.verdict = false;
    cert.witness = std::make_pair(table.words[*i], table.values[*i]);
  } else {
    cert.verdict = true;
  }
  return cert;
}

PolyAutomaton disjoint_union(const PolyAutomaton& A, const PolyAutomaton& B) {
  if (std::set(A.alphabet.begin(), A.alphabet.end()) != std::set(B.alphabet.begin(), B.alphabet.end()))
    throw SchemaError("automata have different alphabets");
  if (A.rule.normal_form != B.rule.normal_form) throw SchemaError("automata have different product rules");
  PolyAutomaton out;
  out.alphabet = A.alphabet;
  out.rule = A.rule;
  auto add = [&out](const PolyAutomaton& X, const std::string& prefix) {
    auto rename = [&prefix](const std::string& v) { return prefix + v; };
    for (const auto& v : X.variables) {
      out.variables.push_back(prefix + v);
      out.output[prefix + v] = X.output.at(v);
    }
    for (const auto& [a, row] : X.transitions)
      for (const auto& [v, p] : row) out.set_transition(a, prefix + v, p.rename(rename));
  };
  add(A, "l.");
  add(B, "r.");
  return out;
}

ZeronessCertificate equivalence(const PolyAutomaton& A, const Poly& p, const PolyAutomaton& B, const Poly& q,
                                const ZeronessOptions& options) {
  check_initial(A, p);
  check_initial(B, q);
  if (options.strict_initial) {
    require_single_variable(A, p);
    require_single_variable(B, q);
  }
  const PolyAutomaton U = disjoint_union(A, B);
  const Poly diff = p.rename([](const std::string& v) { return "l." + v; }) -
                    q.rename([](const std::string& v) { return "r." + v; });
  ZeronessOptions opts = options;
  opts.strict_initial = false;
  return zeroness(U, diff, opts);
}

}  // namespace pprod
