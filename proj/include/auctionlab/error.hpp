#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace auctionlab {

enum class ErrorCode {
  kZeroBid,
  kOverBudget,
  kLengthMismatch,
  kDomainError,
  kNotMultiple,
  kNotDoublyStochastic,
  kInfeasible,
  kEmptySample,
  kStrategyViolation,
  kInvalidScenario,
};

std::string_view to_string(ErrorCode code);

// All library failures that stem from caller input surface as this type.
class AuctionError : public std::invalid_argument {
 public:
  AuctionError(ErrorCode code, const std::string& what)
      : std::invalid_argument(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroBid: return "ZeroBid";
    case ErrorCode::kOverBudget: return "OverBudget";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kNotMultiple: return "NotMultiple";
    case ErrorCode::kNotDoublyStochastic: return "NotDoublyStochastic";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kEmptySample: return "EmptySample";
    case ErrorCode::kStrategyViolation: return "StrategyViolation";
    case ErrorCode::kInvalidScenario: return "InvalidScenario";
  }
  return "Unknown";
}

}  // namespace auctionlab
