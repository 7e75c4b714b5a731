#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace pprod {

/// Explicit resource caps. Exhausting any of them raises ResourceLimitError.
struct Limits {
  unsigned max_degree = 64;
  unsigned max_ideal_levels = 32;
  std::uint64_t max_term_nodes = 1'000'000;
  std::uint64_t max_pairs = 200'000;
  double timeout_seconds = 60.0;
};

/// Wall-clock budget derived from Limits::timeout_seconds.
class Deadline {
public:
  Deadline() = default;
  explicit Deadline(double seconds);

  static Deadline from(const Limits& limits) { return Deadline(limits.timeout_seconds); }

  bool expired() const;
  /// Throws ResourceLimitError("timeout") once the budget is spent.
  void check(const char* where) const;

private:
  std::optional<std::chrono::steady_clock::time_point> until_;
};

}  // namespace pprod
