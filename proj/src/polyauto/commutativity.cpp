#include "pprod/commutativity.hpp"

#include <algorithm>

#include "pprod/errors.hpp"

namespace pprod {
namespace {

PolyExtender right_extender(const RightDerivative& rd) {
  return PolyExtender(
      rd.automaton.rule.normal_form,
      [&rd](const std::string& v) {
        const auto it = rd.renaming.find(v);
        if (it == rd.renaming.end()) throw SchemaError("no right derivative for variable '" + v + "'");
        return Poly::variable(it->second);
      },
      rd.automaton.order());
}

std::string fresh_variable(const PolyAutomaton& A, const std::string& base) {
  std::string name = base;
  for (int k = 1; A.has_variable(name); ++k) name = base + "_" + std::to_string(k);
  return name;
}

}  // namespace

Poly RightDerivative::apply(const Poly& p) const { return right_extender(*this)(p); }

RightDerivative right_derivative_automaton(const PolyAutomaton& A, const std::string& letter) {
  const auto pos = std::find(A.alphabet.begin(), A.alphabet.end(), letter);
  if (pos == A.alphabet.end()) throw SchemaError("letter '" + letter + "' is not in the alphabet");
  const std::string prefix = "R" + std::to_string(pos - A.alphabet.begin()) + ".";

  RightDerivative rd;
  rd.letter = letter;
  rd.automaton = A;
  for (const auto& v : A.variables) {
    const std::string r = prefix + v;
    if (A.has_variable(r)) throw SchemaError("variable '" + r + "' clashes with a right-derivative name");
    rd.renaming[v] = r;
    rd.automaton.variables.push_back(r);
    rd.automaton.output[r] = output(A, A.transition(letter, v));
  }
  PolyExtender d = right_extender(rd);
  for (const auto& a : A.alphabet)
    for (const auto& v : A.variables) {
      Poly image = d(A.transition(a, v));
      if (!image.is_zero()) rd.automaton.set_transition(a, rd.renaming.at(v), std::move(image));
    }
  return rd;
}

CommutativityResult is_commutative(const PolyAutomaton& A, const Poly& p, const ZeronessOptions& options) {
  A.validate();
  check_initial(A, p);
  ZeronessOptions opts = options;
  opts.strict_initial = false;
  CommutativityResult result;

  auto fail = [&](ZeronessCertificate cert, std::string check, Word left, Word right) {
    result.commutative = false;
    result.failing_check = std::move(check);
    result.witness_values = std::make_pair(coefficient(A, p, left, options.limits),
                                           coefficient(A, p, right, options.limits));
    result.witness_words = std::make_pair(std::move(left), std::move(right));
    result.failing = std::move(cert);
  };

  const auto& sigma = A.alphabet;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      const std::string &a = sigma[i], &b = sigma[j];
      const Poly ab = delta_extend(A, b, delta_extend(A, a, p));
      const Poly ba = delta_extend(A, a, delta_extend(A, b, p));
      ++result.checks_run;
      ZeronessCertificate cert = zeroness(A, ab - ba, opts);
      if (!cert.verdict) {
        Word left{a, b}, right{b, a};
        const Word& w = cert.witness->first;
        left.insert(left.end(), w.begin(), w.end());
        right.insert(right.end(), w.begin(), w.end());
        fail(std::move(cert), "swap " + a + " " + b, std::move(left), std::move(right));
        return result;
      }
    }

  for (const auto& a : sigma) {
    const RightDerivative rd = right_derivative_automaton(A, a);
    ++result.checks_run;
    ZeronessCertificate cert = zeroness(rd.automaton, delta_extend(A, a, p) - rd.apply(p), opts);
    if (!cert.verdict) {
      const Word& w = cert.witness->first;
      Word left{a}, right = w;
      left.insert(left.end(), w.begin(), w.end());
      right.push_back(a);
      fail(std::move(cert), "right " + a, std::move(left), std::move(right));
      return result;
    }
  }
  return result;
}

PointedPolyAutomaton equivalence_to_commutativity(const PolyAutomaton& A, const Poly& p, const std::string& fresh_a,
                                                  const std::string& fresh_b) {
  check_initial(A, p);
  if (fresh_a.empty() || fresh_b.empty() || fresh_a == fresh_b)
    throw PreconditionError("fresh letters must be distinct and nonempty");
  for (const auto& l : {fresh_a, fresh_b})
    if (A.has_letter(l)) throw PreconditionError("letter '" + l + "' already belongs to the alphabet");

  PointedPolyAutomaton out;
  PolyAutomaton& B = out.automaton;
  B = A;
  B.alphabet.push_back(fresh_a);
  B.alphabet.push_back(fresh_b);
  const std::string g = fresh_variable(A, "g");
  const std::string h = fresh_variable(A, "h");
  B.variables.push_back(g);
  B.variables.push_back(h);
  B.output[g] = 0;
  B.output[h] = 0;
  B.set_transition(fresh_a, g, Poly::variable(h));
  if (!p.is_zero()) B.set_transition(fresh_b, h, p);
  out.initial = Poly::variable(g);
  return out;
}

}  // namespace pprod
