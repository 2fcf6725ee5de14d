#include "cosetgrowth/deadline.hpp"

#include "cosetgrowth/error.hpp"

namespace cosetgrowth {
namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> current_deadline;
}

ScopedDeadline::ScopedDeadline(std::chrono::milliseconds budget) : previous_(current_deadline) {
  const auto until = std::chrono::steady_clock::now() + budget;
  if (!current_deadline || until < *current_deadline) current_deadline = until;
}

ScopedDeadline::~ScopedDeadline() { current_deadline = previous_; }

void check_deadline() {
  if (current_deadline && std::chrono::steady_clock::now() > *current_deadline) {
    throw Error(ErrorCode::budget_exhausted, "time budget exhausted");
  }
}

}  // namespace cosetgrowth
