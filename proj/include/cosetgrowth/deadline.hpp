#pragma once

#include <chrono>
#include <optional>

namespace cosetgrowth {

// Cooperative wall-clock budget for the current thread. Long-running loops
// call check_deadline(), which throws Error(budget_exhausted) once the budget
// installed by the innermost ScopedDeadline has elapsed.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::milliseconds budget);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

void check_deadline();

}  // namespace cosetgrowth
