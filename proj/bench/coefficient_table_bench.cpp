#include <chrono>
#include <cstdio>
#include <random>

#include <CLI11.hpp>

#include "pprod/coefficient_table.hpp"
#include "pprod/poly_automaton.hpp"

using namespace pprod;

namespace {

PolyAutomaton workload(unsigned letters, unsigned variables, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3), pick(0, static_cast<int>(variables) - 1);
  PolyAutomaton A;
  A.rule = ProductRule::parse("infiltration");
  for (unsigned i = 0; i < letters; ++i) A.alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
  for (unsigned i = 0; i < variables; ++i) A.variables.push_back("x" + std::to_string(i + 1));
  auto var = [&] { return Poly::variable(A.variables[static_cast<std::size_t>(pick(rng))]); };
  for (const auto& v : A.variables) {
    A.output[v] = Rational(coeff(rng), 2);
    for (const auto& a : A.alphabet) A.set_transition(a, v, Rational(coeff(rng) | 1) * var() + var());
  }
  return A;
}

template <class F>
double best_of(int repeat, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel coefficient table"};
  unsigned length = 8, letters = 3, variables = 4;
  int repeat = 3;
  std::uint64_t seed = 1;
  app.add_option("--length", length, "maximum word length");
  app.add_option("--letters", letters, "alphabet size")->check(CLI::Range(1, 26));
  app.add_option("--variables", variables, "automaton variables")->check(CLI::Range(1, 64));
  app.add_option("--repeat", repeat, "runs per kernel, best time reported")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "workload seed");
  CLI11_PARSE(app, argc, argv);

  const PolyAutomaton A = workload(letters, variables, seed);
  const Poly p = Poly::variable("x1") * Poly::variable(A.variables.back());
  Limits limits;
  limits.timeout_seconds = 3600;

  CoefficientTable serial, parallel;
  const double ts = best_of(repeat, [&] { serial = coefficient_table_serial(A, p, length, limits); });
  const double tp = best_of(repeat, [&] { parallel = coefficient_table(A, p, length, limits); });
  const bool same = serial.words == parallel.words && serial.values == parallel.values;

  std::printf("words      %zu\n", serial.words.size());
  std::printf("threads    %d\n", coefficient_table_threads());
  std::printf("serial     %.4f s\n", ts);
  std::printf("parallel   %.4f s\n", tp);
  std::printf("speedup    %.2fx\n", tp > 0 ? ts / tp : 0.0);
  std::printf("identical  %s\n", same ? "yes" : "NO");
  return same ? 0 : 1;
}
