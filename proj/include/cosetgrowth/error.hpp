#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cosetgrowth {

enum class ErrorCode {
  syntax_error,
  unknown_generator,
  empty_relator,
  invalid_argument,
  not_certified,
  radius_exceeded,
  budget_exhausted,
  not_found,
  none_qualify,
  separator_failure,
  config_invalid,
  degenerate_series,
  io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every domain failure surfaces as this exception; the CLI maps it to
// {"error": code, "detail": what()}.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cosetgrowth
