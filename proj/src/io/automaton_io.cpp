#include "pprod/automaton_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pprod/errors.hpp"
#include "pprod/parser.hpp"

namespace pprod {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw SchemaError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Rational rational_value(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(where + ": " + e.what());
  }
  throw SchemaError(where + ": rationals are strings \"p/q\" or integers");
}

template <class F>
auto with_context(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.detail(), e.position());
  }
}

json rational_json(const Rational& r) { return r.to_string(); }

}  // namespace

const std::vector<std::string>& AutomatonDocument::alphabet() const {
  return kind == Kind::Term ? term.automaton.alphabet : poly.automaton.alphabet;
}

PointedPolyAutomaton AutomatonDocument::as_poly() const {
  if (kind == Kind::Poly) return poly;
  return {from_term_automaton(term.automaton), to_poly(term.initial)};
}

PointedTermAutomaton AutomatonDocument::as_term() const {
  if (kind == Kind::Term) return term;
  PointedTermAutomaton out;
  TermAutomaton& T = out.automaton;
  T.alphabet = poly.automaton.alphabet;
  T.variables = poly.automaton.variables;
  T.rule = poly.automaton.rule;
  T.output = poly.automaton.output;
  const MonomialOrder order = poly.automaton.order();
  for (const auto& [a, row] : poly.automaton.transitions)
    for (const auto& [v, p] : row) T.set_transition(a, v, parse_term(p.to_string(order)));
  out.initial = parse_term(poly.initial.to_string(order));
  return out;
}

AutomatonDocument parse_automaton(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!doc.is_object()) throw SchemaError("automaton document must be a JSON object");
  static const std::set<std::string> known{"alphabet", "rule", "variables", "output", "transitions", "initial", "kind"};
  for (const auto& [key, value] : doc.items())
    if (!known.contains(key)) throw SchemaError("unknown field '" + key + "'");

  AutomatonDocument out;
  if (doc.contains("kind")) {
    const json& k = doc.at("kind");
    if (k == "term") {
      out.kind = AutomatonDocument::Kind::Term;
    } else if (k != "poly") {
      throw SchemaError("kind must be \"term\" or \"poly\"");
    }
  }
  const auto alphabet = string_list(field(doc, "alphabet"), "alphabet");
  const auto variables = string_list(field(doc, "variables"), "variables");
  for (const auto& v : variables)
    if (!is_identifier(v)) throw SchemaError("variable '" + v + "' is not an identifier");
  if (!field(doc, "rule").is_string()) throw SchemaError("rule must be a string");
  out.rule = doc.at("rule").get<std::string>();
  const ProductRule rule = with_context("rule", [&] { return ProductRule::from_term(parse_rule(out.rule)); });

  std::map<std::string, Rational> output;
  const json& outj = field(doc, "output");
  if (!outj.is_object()) throw SchemaError("output must be an object");
  for (const auto& [v, c] : outj.items()) output[v] = rational_value(c, "output." + v);

  std::map<std::string, std::map<std::string, std::string>> delta;
  if (doc.contains("transitions")) {
    const json& tj = doc.at("transitions");
    if (!tj.is_object()) throw SchemaError("transitions must be an object");
    for (const auto& [a, row] : tj.items()) {
      if (!row.is_object()) throw SchemaError("transitions." + a + " must be an object");
      for (const auto& [v, e] : row.items()) {
        if (!e.is_string()) throw SchemaError("transitions." + a + "." + v + " must be a string");
        delta[a][v] = e.get<std::string>();
      }
    }
  }
  std::string initial;
  if (doc.contains("initial")) {
    if (!doc.at("initial").is_string()) throw SchemaError("initial must be a string");
    initial = doc.at("initial").get<std::string>();
  } else {
    if (variables.empty()) throw SchemaError("no variables and no initial expression");
    initial = variables.front();
  }

  if (out.kind == AutomatonDocument::Kind::Term) {
    TermAutomaton& T = out.term.automaton;
    T.alphabet = alphabet;
    T.variables = variables;
    T.rule = rule;
    T.output = output;
    for (const auto& [a, row] : delta)
      for (const auto& [v, e] : row)
        T.set_transition(a, v, with_context("transitions." + a + "." + v, [&] { return parse_term(e); }));
    T.validate();
    out.term.initial = with_context("initial", [&] { return parse_term(initial); });
    check_scoped(T, out.term.initial);
  } else {
    PolyAutomaton& A = out.poly.automaton;
    A.alphabet = alphabet;
    A.variables = variables;
    A.rule = rule;
    A.output = output;
    for (const auto& [a, row] : delta)
      for (const auto& [v, e] : row) {
        Poly p = with_context("transitions." + a + "." + v, [&] { return parse_poly(e); });
        if (!p.is_zero()) A.set_transition(a, v, std::move(p));
      }
    A.validate();
    out.poly.initial = with_context("initial", [&] { return parse_poly(initial); });
    for (const auto& v : out.poly.initial.variables())
      if (!A.has_variable(v)) throw SchemaError("initial mentions undeclared variable '" + v + "'");
  }
  return out;
}

AutomatonDocument load_automaton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_automaton(buf.str());
}

std::string serialize_automaton(const AutomatonDocument& doc) {
  json j;
  j["kind"] = doc.kind == AutomatonDocument::Kind::Term ? "term" : "poly";
  j["rule"] = doc.rule;
  j["alphabet"] = doc.alphabet();
  json output = json::object(), transitions = json::object();
  if (doc.kind == AutomatonDocument::Kind::Term) {
    const TermAutomaton& T = doc.term.automaton;
    j["variables"] = T.variables;
    for (const auto& [v, c] : T.output) output[v] = rational_json(c);
    for (const auto& a : T.alphabet) {
      json row = json::object();
      for (const auto& v : T.variables) row[v] = T.transition(a, v).to_string();
      transitions[a] = row;
    }
    j["initial"] = doc.term.initial.to_string();
  } else {
    const PolyAutomaton& A = doc.poly.automaton;
    const MonomialOrder order = A.order();
    j["variables"] = A.variables;
    for (const auto& [v, c] : A.output) output[v] = rational_json(c);
    for (const auto& a : A.alphabet) {
      json row = json::object();
      for (const auto& v : A.variables) row[v] = A.transition(a, v).to_string(order);
      transitions[a] = row;
    }
    j["initial"] = doc.poly.initial.to_string(order);
  }
  j["output"] = output;
  j["transitions"] = transitions;
  return j.dump(2) + "\n";
}

namespace {
bool single_char_letters(const std::vector<std::string>& alphabet) {
  for (const auto& a : alphabet)
    if (a.size() != 1) return false;
  return true;
}
}  // namespace

Word parse_word(const std::vector<std::string>& alphabet, std::string_view text) {
  Word w;
  if (text.empty() || text == "ε") return w;
  auto check = [&](const std::string& l) {
    if (std::find(alphabet.begin(), alphabet.end(), l) == alphabet.end())
      throw SchemaError("'" + l + "' is not a letter of the alphabet");
  };
  if (single_char_letters(alphabet)) {
    for (char c : text) {
      if (c == ' ') continue;
      w.emplace_back(1, c);
      check(w.back());
    }
    return w;
  }
  std::istringstream in{std::string(text)};
  for (std::string l; in >> l;) {
    check(l);
    w.push_back(l);
  }
  return w;
}

std::string format_word(const std::vector<std::string>& alphabet, const Word& w) {
  if (w.empty()) return "ε";
  const bool concat = single_char_letters(alphabet);
  std::string out;
  for (const auto& l : w) {
    if (!concat && !out.empty()) out += ' ';
    out += l;
  }
  return out;
}

std::string certificate_json(const ZeronessCertificate& cert, const std::vector<std::string>& alphabet,
                             const MonomialOrder& order) {
  json j;
  j["verdict"] = cert.verdict;
  j["N"] = cert.N;
  j["words_checked"] = cert.words_checked;
  j["witness_word"] = cert.witness ? json(format_word(alphabet, cert.witness->first)) : json(nullptr);
  j["witness_value"] = cert.witness ? rational_json(cert.witness->second) : json(nullptr);
  json gens = json::array();
  for (const auto& [w, p] : cert.generators) gens.push_back({{"word", format_word(alphabet, w)}, {"poly", p.to_string(order)}});
  j["generators"] = gens;
  j["limits_hit"] = cert.limits_hit;
  return j.dump(2) + "\n";
}

std::string limit_hit_json(const std::string& limit) {
  json j;
  j["verdict"] = nullptr;
  j["N"] = nullptr;
  j["words_checked"] = 0;
  j["witness_word"] = nullptr;
  j["witness_value"] = nullptr;
  j["generators"] = json::array();
  j["limits_hit"] = json::array({limit});
  return j.dump(2) + "\n";
}

std::string commutativity_json(const CommutativityResult& r, const std::vector<std::string>& alphabet,
                               const MonomialOrder& order) {
  json j;
  j["verdict"] = r.commutative;
  j["checks_run"] = r.checks_run;
  if (r.witness_words) {
    j["witness_words"] = {format_word(alphabet, r.witness_words->first), format_word(alphabet, r.witness_words->second)};
    j["witness_values"] = {rational_json(r.witness_values->first), rational_json(r.witness_values->second)};
    j["failing_check"] = r.failing_check;
    j["certificate"] = json::parse(certificate_json(*r.failing, alphabet, order));
  } else {
    j["witness_words"] = nullptr;
    j["witness_values"] = nullptr;
    j["failing_check"] = nullptr;
    j["certificate"] = nullptr;
  }
  return j.dump(2) + "\n";
}

}  // namespace pprod
