#include "pprod/cli.hpp"

#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "pprod/automaton_io.hpp"
#include "pprod/coefficient_table.hpp"
#include "pprod/commutativity.hpp"
#include "pprod/errors.hpp"
#include "pprod/parser.hpp"
#include "pprod/rules.hpp"
#include "pprod/zeroness.hpp"

namespace pprod {
namespace {

using nlohmann::json;

struct Common {
  Limits limits;
  bool json = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--max-degree", c.limits.max_degree, "Largest polynomial degree")->check(CLI::PositiveNumber);
  sub->add_option("--max-ideal-levels", c.limits.max_ideal_levels, "Longest ideal chain")->check(CLI::PositiveNumber);
  sub->add_option("--max-term-nodes", c.limits.max_term_nodes, "Largest term")->check(CLI::PositiveNumber);
  sub->add_option("--max-pairs", c.limits.max_pairs, "Most critical pairs per basis")->check(CLI::PositiveNumber);
  sub->add_option("--timeout", c.limits.timeout_seconds, "Wall-clock budget in seconds")->check(CLI::PositiveNumber);
  sub->add_flag("--json", c.json, "Machine-readable report");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

const MonomialOrder kRuleOrder({"x", "xd", "y", "yd", "z", "zd"});

json speciality_json(const ProductRule& rule) {
  const SpecialityReport& r = rule.speciality;
  const BilinearDiagnostics d = bilinear_diagnostics(rule.normal_form);
  json j;
  j["rule"] = rule.normal_form.to_string(kRuleOrder);
  j["special"] = r.special();
  j["add_ok"] = r.add_ok;
  j["assoc_ok"] = r.assoc_ok;
  j["comm_ok"] = r.comm_ok;
  j["failing"] = r.failing;
  j["failing_identity"] = r.failing_identity ? json(r.failing_identity->to_string(kRuleOrder)) : json(nullptr);
  j["simple"] = r.simple ? json::array({r.simple->alpha.to_string(), r.simple->beta.to_string(), r.simple->gamma.to_string()})
                         : json(nullptr);
  j["unit_eta"] = r.unit_eta ? json(r.unit_eta->to_string()) : json(nullptr);
  j["bilinear"] = {{"bilinear", d.bilinear},
                   {"alpha", d.alpha.to_string()},
                   {"beta1", d.beta1.to_string()},
                   {"beta2", d.beta2.to_string()},
                   {"gamma", d.gamma.to_string()},
                   {"alpha_balanced", d.alpha_balanced},
                   {"gamma_balanced", d.gamma_balanced},
                   {"beta1_quadratic", d.beta1_quadratic},
                   {"beta2_quadratic", d.beta2_quadratic}};
  j["ideal_compatible"] = ideal_compatible(rule.normal_form);
  return j;
}

std::string eta_text(const SpecialityReport& r) { return r.unit_eta ? r.unit_eta->to_string() : "none"; }

// One-line summary used by check-rule.
std::string speciality_line(const SpecialityReport& r) {
  if (!r.special()) return "special: no; failing: " + join(r.failing, ", ");
  return "special: yes; simple: " + r.simple->to_string() + "; unit eta = " + eta_text(r);
}

PointedPolyAutomaton with_initial(PointedPolyAutomaton p, const std::string& initial) {
  if (!initial.empty()) p.initial = parse_poly(initial);
  check_initial(p.automaton, p.initial);
  return p;
}

// Coefficients of a term document for every word up to L, level by level.
std::vector<Rational> term_table(const PointedTermAutomaton& p, unsigned L, const TermOptions& options) {
  const auto& A = p.automaton;
  std::vector<Rational> values{output(A, p.initial)};
  std::vector<Term> level{p.initial};
  for (unsigned len = 1; len <= L && !A.alphabet.empty(); ++len) {
    std::vector<Term> next;
    next.reserve(level.size() * A.alphabet.size());
    for (const auto& t : level)
      for (const auto& a : A.alphabet) {
        next.push_back(extend_word(A, t, Word{a}, options));
        values.push_back(output(A, next.back()));
      }
    level = std::move(next);
  }
  return values;
}

class Cli {
public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"P-products of formal power series: rule analysis and automata deciders", "pprod"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");
    build(app);

    std::vector<const char*> argv{"pprod"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    }

    try {
      action_();
      return kExitOk;
    } catch (const ResourceLimitError& e) {
      if (common_.json && emits_certificate_) out_ << limit_hit_json(e.limit());
      err_ << "error: " << e.what() << "\n";
      return kExitResourceLimit;
    } catch (const PreconditionError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitPrecondition;
    } catch (const ParseError& e) {
      err_ << "parse error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const SchemaError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const UnassignedVariableError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const std::exception& e) {
      err_ << "internal error: " << e.what() << "\n";
      return kExitInternal;
    }
  }

private:
  void build(CLI::App& app) {
    {
      auto* sub = app.add_subcommand("check-rule", "Decide whether a product rule is special");
      sub->add_option("--rule", rule_, "Preset (hadamard, shuffle, infiltration, trivial0) or expression")->required();
      add_common(sub, common_);
      sub->callback([this] { action_ = [this] { check_rule(); }; });
    }
    {
      auto* sub = app.add_subcommand("classify", "Simple form (alpha, beta, gamma) and diagnostics");
      sub->add_option("--rule", rule_, "Preset or expression")->required();
      add_common(sub, common_);
      sub->callback([this] { action_ = [this] { classify(); }; });
    }
    {
      auto* sub = app.add_subcommand("unit", "Multiplicative identity eta of a special rule");
      sub->add_option("--rule", rule_, "Preset or expression")->required();
      add_common(sub, common_);
      sub->callback([this] { action_ = [this] { unit(); }; });
    }
    {
      auto* sub = app.add_subcommand("coeff", "Coefficient of one word");
      sub->add_option("--automaton", automaton_, "Automaton JSON file")->required();
      sub->add_option("--word", word_, "Word (\"\" or ε for the empty word)")->required();
      sub->add_option("--initial", initial_, "Initial expression (default: the document's)");
      add_common(sub, common_);
      sub->callback([this] { action_ = [this] { coeff(); }; });
    }
    {
      auto* sub = app.add_subcommand("run", "All coefficients up to a length, in length-lex order");
      sub->add_option("--automaton", automaton_, "Automaton JSON file")->required();
      sub->add_option("--max-length", max_length_, "Longest word")->required();
      sub->add_option("--initial", initial_, "Initial expression (default: the document's)");
      add_common(sub, common_);
      sub->callback([this] { action_ = [this] { run_table(); }; });
    }
    {
      auto* sub = app.add_subcommand("zeroness", "Decide whether the series is zero");
      sub->add_option("--automaton", automaton_, "Automaton JSON file")->required();
      sub->add_option("--initial", initial_, "Initial polynomial (default: the document's)");
      add_decider_flags(sub);
      sub->callback([this] { action_ = [this] { zeroness_cmd(); }; });
    }
    {
      auto* sub = app.add_subcommand("equiv", "Decide whether two automata denote the same series");
      sub->add_option("--left", automaton_, "First automaton JSON file")->required();
      sub->add_option("--right", right_, "Second automaton JSON file")->required();
      sub->add_option("--left-initial", initial_, "Initial polynomial of the first automaton");
      sub->add_option("--right-initial", right_initial_, "Initial polynomial of the second automaton");
      add_decider_flags(sub);
      sub->callback([this] { action_ = [this] { equiv(); }; });
    }
    {
      auto* sub = app.add_subcommand("commutative", "Decide whether the series is commutative");
      sub->add_option("--automaton", automaton_, "Automaton JSON file")->required();
      sub->add_option("--initial", initial_, "Initial polynomial (default: the document's)");
      add_decider_flags(sub);
      sub->callback([this] { action_ = [this] { commutative(); }; });
    }
    {
      auto* sub = app.add_subcommand("reduce-eq2comm", "Automaton that is commutative iff the input series is zero");
      sub->add_option("--automaton", automaton_, "Automaton JSON file")->required();
      sub->add_option("--initial", initial_, "Initial polynomial (default: the document's)");
      sub->add_option("--fresh-a", fresh_a_, "First fresh letter");
      sub->add_option("--fresh-b", fresh_b_, "Second fresh letter");
      add_common(sub, common_);
      sub->callback([this] { action_ = [this] { reduce_cmd(); }; });
    }
  }

  void add_decider_flags(CLI::App* sub) {
    add_common(sub, common_);
    sub->add_flag("--no-prune", no_prune_, "Run the literal ideal chain over all words");
    sub->add_flag("--strict-initial", strict_initial_, "Require a single-variable initial polynomial");
    sub->add_flag("--verify-chain", verify_chain_, "Check one level past the stabilization index");
  }

  ZeronessOptions decider_options() const {
    ZeronessOptions o;
    o.limits = common_.limits;
    o.prune = !no_prune_;
    o.strict_initial = strict_initial_;
    o.verify_chain = verify_chain_;
    return o;
  }

  void check_rule() {
    const ProductRule rule = ProductRule::parse(rule_);
    if (common_.json) {
      out_ << speciality_json(rule).dump(2) << "\n";
      return;
    }
    out_ << speciality_line(rule.speciality) << "\n";
  }

  void classify() {
    const ProductRule rule = ProductRule::parse(rule_);
    const SpecialityReport& r = rule.speciality;
    if (common_.json) {
      out_ << speciality_json(rule).dump(2) << "\n";
      return;
    }
    const BilinearDiagnostics d = bilinear_diagnostics(rule.normal_form);
    if (r.simple) {
      out_ << "simple: " << r.simple->to_string() << "\n";
      out_ << "unit eta: " << eta_text(r) << "\n";
    } else {
      out_ << "simple: none; failing: " << join(r.failing, ", ") << "\n";
    }
    out_ << "bilinear: " << yes_no(d.bilinear) << " (alpha, beta1, beta2, gamma) = (" << d.alpha << ", " << d.beta1
         << ", " << d.beta2 << ", " << d.gamma << ")\n";
    out_ << "alpha*(beta1 - beta2) = 0: " << yes_no(d.alpha_balanced) << "\n";
    out_ << "gamma*(beta1 - beta2) = 0: " << yes_no(d.gamma_balanced) << "\n";
    out_ << "alpha*gamma = beta1*(beta1 - 1): " << yes_no(d.beta1_quadratic) << "\n";
    out_ << "alpha*gamma = beta2*(beta2 - 1): " << yes_no(d.beta2_quadratic) << "\n";
    out_ << "ideal compatible: " << yes_no(ideal_compatible(rule.normal_form)) << "\n";
  }

  void unit() {
    const ProductRule rule = ProductRule::parse(rule_);
    if (!rule.speciality.simple)
      throw PreconditionError("rule is not special (failing: " + join(rule.speciality.failing, ", ") + ")");
    const auto eta = rule.speciality.unit_eta;
    if (common_.json) {
      out_ << json{{"unit_eta", eta ? json(eta->to_string()) : json(nullptr)},
                   {"simple", rule.speciality.simple->to_string()}}
                  .dump(2)
           << "\n";
      return;
    }
    out_ << (eta ? "eta = " + eta->to_string() : std::string("none (degenerate: beta = gamma = 0)")) << "\n";
  }

  void coeff() {
    const AutomatonDocument doc = load_automaton(automaton_);
    const Word w = parse_word(doc.alphabet(), word_);
    Rational c;
    if (doc.kind == AutomatonDocument::Kind::Term) {
      PointedTermAutomaton p = doc.term;
      if (!initial_.empty()) p.initial = parse_term(initial_);
      check_scoped(p.automaton, p.initial);
      c = coefficient(p.automaton, p.initial, w, TermOptions::from(common_.limits));
    } else {
      const PointedPolyAutomaton p = with_initial(doc.poly, initial_);
      c = coefficient(p.automaton, p.initial, w, common_.limits);
    }
    if (common_.json) {
      out_ << json{{"word", format_word(doc.alphabet(), w)}, {"coefficient", c.to_string()}}.dump(2) << "\n";
    } else {
      out_ << c << "\n";
    }
  }

  void run_table() {
    const AutomatonDocument doc = load_automaton(automaton_);
    const auto words = words_upto(doc.alphabet(), max_length_);
    std::vector<Rational> values;
    if (doc.kind == AutomatonDocument::Kind::Term) {
      PointedTermAutomaton p = doc.term;
      if (!initial_.empty()) p.initial = parse_term(initial_);
      check_scoped(p.automaton, p.initial);
      values = term_table(p, max_length_, TermOptions::from(common_.limits));
    } else {
      const PointedPolyAutomaton p = with_initial(doc.poly, initial_);
      values = coefficient_table(p.automaton, p.initial, max_length_, common_.limits).values;
    }
    if (common_.json) {
      json rows = json::array();
      for (std::size_t i = 0; i < words.size(); ++i)
        rows.push_back({{"word", format_word(doc.alphabet(), words[i])}, {"coefficient", values[i].to_string()}});
      out_ << rows.dump(2) << "\n";
      return;
    }
    for (std::size_t i = 0; i < words.size(); ++i) out_ << format_word(doc.alphabet(), words[i]) << " " << values[i] << "\n";
  }

  void report(const ZeronessCertificate& cert, const std::vector<std::string>& alphabet, const MonomialOrder& order) {
    if (common_.json) {
      out_ << certificate_json(cert, alphabet, order);
      return;
    }
    out_ << (cert.verdict ? "YES" : "NO") << "\n";
    out_ << "N = " << cert.N << "; words checked = " << cert.words_checked << "; generators = " << cert.generators.size()
         << "\n";
    if (cert.witness)
      out_ << "witness: " << format_word(alphabet, cert.witness->first) << " -> " << cert.witness->second << "\n";
  }

  void zeroness_cmd() {
    emits_certificate_ = true;
    const PointedPolyAutomaton p = with_initial(load_automaton(automaton_).as_poly(), initial_);
    report(zeroness(p.automaton, p.initial, decider_options()), p.automaton.alphabet, p.automaton.order());
  }

  void equiv() {
    emits_certificate_ = true;
    const PointedPolyAutomaton l = with_initial(load_automaton(automaton_).as_poly(), initial_);
    const PointedPolyAutomaton r = with_initial(load_automaton(right_).as_poly(), right_initial_);
    const ZeronessCertificate cert = equivalence(l.automaton, l.initial, r.automaton, r.initial, decider_options());
    const PolyAutomaton u = disjoint_union(l.automaton, r.automaton);
    report(cert, u.alphabet, u.order());
  }

  void commutative() {
    emits_certificate_ = true;
    const PointedPolyAutomaton p = with_initial(load_automaton(automaton_).as_poly(), initial_);
    const CommutativityResult r = is_commutative(p.automaton, p.initial, decider_options());
    const auto& alphabet = p.automaton.alphabet;
    if (common_.json) {
      out_ << commutativity_json(r, alphabet, p.automaton.order());
      return;
    }
    out_ << (r.commutative ? "YES" : "NO") << "\n";
    out_ << "checks run = " << r.checks_run << "\n";
    if (r.witness_words)
      out_ << "witness: " << format_word(alphabet, r.witness_words->first) << " -> " << r.witness_values->first << " vs "
           << format_word(alphabet, r.witness_words->second) << " -> " << r.witness_values->second << " ("
           << r.failing_check << ")\n";
  }

  void reduce_cmd() {
    const AutomatonDocument in = load_automaton(automaton_);
    const PointedPolyAutomaton p = with_initial(in.as_poly(), initial_);
    AutomatonDocument out;
    out.kind = AutomatonDocument::Kind::Poly;
    out.rule = in.rule;
    out.poly = equivalence_to_commutativity(p.automaton, p.initial, fresh_a_, fresh_b_);
    out_ << serialize_automaton(out);
  }

  std::ostream& out_;
  std::ostream& err_;
  Common common_;
  std::function<void()> action_;
  bool emits_certificate_ = false;

  std::string rule_, automaton_, right_, word_, initial_, right_initial_;
  std::string fresh_a_ = "#a", fresh_b_ = "#b";
  unsigned max_length_ = 0;
  bool no_prune_ = false, strict_initial_ = false, verify_chain_ = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Cli(out, err).run(args);
}

}  // namespace pprod
