#include "pprod/coefficient_table.hpp"

#include <exception>
#include <limits>

#include "pprod/errors.hpp"

#ifdef PPROD_HAVE_OPENMP
#include <omp.h>
#endif

namespace pprod {

std::uint64_t count_words_upto(std::size_t letters, unsigned max_length) {
  std::uint64_t total = 1, level = 1;
  for (unsigned k = 1; k <= max_length; ++k) {
    if (letters != 0 && level > std::numeric_limits<std::uint64_t>::max() / letters)
      throw ResourceLimitError("max_words", "too many words");
    level *= letters;
    if (total > std::numeric_limits<std::uint64_t>::max() - level)
      throw ResourceLimitError("max_words", "too many words");
    total += level;
  }
  return total;
}

std::vector<Word> words_upto(const std::vector<std::string>& alphabet, unsigned max_length) {
  std::vector<Word> out;
  out.reserve(count_words_upto(alphabet.size(), max_length));
  out.emplace_back();
  std::size_t begin = 0;
  for (unsigned len = 1; len <= max_length && !alphabet.empty(); ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (const auto& a : alphabet) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

std::optional<std::size_t> CoefficientTable::first_nonzero() const {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!values[i].is_zero()) return i;
  return std::nullopt;
}

namespace {

// Level k holds Δ_w p for the |Σ|^k words of length k, in lex order, so the
// child of parent i by letter j sits at i·|Σ| + j.
CoefficientTable build(const PolyAutomaton& A, const Poly& p, unsigned max_length, const Limits& limits,
                       bool parallel) {
  check_initial(A, p);
  const Deadline deadline = Deadline::from(limits);
  const std::size_t k = A.alphabet.size();
  CoefficientTable table;
  table.words = words_upto(A.alphabet, max_length);
  table.values.reserve(table.words.size());

  std::vector<Poly> level{p};
  table.values.push_back(output(A, p));
  for (unsigned len = 1; len <= max_length && k != 0; ++len) {
    deadline.check("coefficient table");
    const std::size_t n = level.size() * k;
    std::vector<Poly> next(n);
    std::vector<Rational> values(n);
    std::exception_ptr failure;
    const auto body = [&](std::size_t i) {
      try {
        const Poly& parent = level[i / k];
        if (parent.is_zero()) return;
        next[i] = delta_extend(A, A.alphabet[i % k], parent);
        check_degree(next[i], limits);
        values[i] = output(A, next[i]);
      } catch (...) {
#ifdef PPROD_HAVE_OPENMP
#pragma omp critical(pprod_table_failure)
#endif
        if (!failure) failure = std::current_exception();
      }
    };
#ifdef PPROD_HAVE_OPENMP
    if (parallel && n > 1) {
      const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
    } else {
      for (std::size_t i = 0; i < n; ++i) body(i);
    }
#else
    (void)parallel;
    for (std::size_t i = 0; i < n; ++i) body(i);
#endif
    if (failure) std::rethrow_exception(failure);
    for (auto& v : values) table.values.push_back(std::move(v));
    level = std::move(next);
  }
  return table;
}

}  // namespace

CoefficientTable coefficient_table(const PolyAutomaton& A, const Poly& p, unsigned max_length,
                                   const Limits& limits) {
  return build(A, p, max_length, limits, true);
}

CoefficientTable coefficient_table_serial(const PolyAutomaton& A, const Poly& p, unsigned max_length,
                                          const Limits& limits) {
  return build(A, p, max_length, limits, false);
}

int coefficient_table_threads() {
#ifdef PPROD_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace pprod
