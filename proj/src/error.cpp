#include "dramsey/error.hpp"

namespace dramsey {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonOrthogonal: return "NonOrthogonal";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotSimplex: return "NotSimplex";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace dramsey
