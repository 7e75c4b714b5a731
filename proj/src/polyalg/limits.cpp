#include "pprod/limits.hpp"

#include <string>

#include "pprod/errors.hpp"

namespace pprod {

Deadline::Deadline(double seconds) {
  if (seconds > 0) {
    until_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds));
  }
}

bool Deadline::expired() const {
  return until_ && std::chrono::steady_clock::now() > *until_;
}

void Deadline::check(const char* where) const {
  if (expired()) throw ResourceLimitError("timeout", std::string("time budget spent in ") + where);
}

}  // namespace pprod
