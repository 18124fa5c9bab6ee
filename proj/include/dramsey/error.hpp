#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dramsey {

enum class ErrorCode {
  InvalidArgument,
  DomainError,
  NonOrthogonal,
  NotSpherical,
  Degenerate,
  NotSimplex,
  Infeasible,
  NonConvergence,
  EmptySample,
  BudgetExceeded,
  ParseError,
  IoError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C API and the CLI can report it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dramsey
