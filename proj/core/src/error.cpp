#include "grundylab/error.hpp"

#include <limits>

namespace grundylab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kInvalidRule: return "invalid rule";
    case ErrorCode::kHorizonExceeded: return "horizon exceeded";
    case ErrorCode::kNotWeaklyIncreasing: return "rule not weakly increasing";
    case ErrorCode::kNotRegular: return "rule not regular";
    case ErrorCode::kNotFractal: return "sequence not fractal";
    case ErrorCode::kQUndefined: return "q undefined within horizon";
    case ErrorCode::kPairOutOfRange: return "pair out of range";
    case ErrorCode::kNotFound: return "not found within bound";
    case ErrorCode::kUnrealizable: return "unrealizable column sums";
    case ErrorCode::kInvalidTriangle: return "invalid triangle";
    case ErrorCode::kInsufficientWindow: return "insufficient window";
    case ErrorCode::kOverflow: return "arithmetic overflow";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kSizeBound: return "size bound exceeded";
    case ErrorCode::kMismatch: return "evaluators disagree";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<Natural> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(witness) {}

Natural checked_add(Natural a, Natural b) {
  if (a > std::numeric_limits<Natural>::max() - b) {
    throw Error(ErrorCode::kOverflow, "addition exceeds 64 bits");
  }
  return a + b;
}

Natural checked_mul(Natural a, Natural b) {
  if (a != 0 && b > std::numeric_limits<Natural>::max() / a) {
    throw Error(ErrorCode::kOverflow, "multiplication exceeds 64 bits");
  }
  return a * b;
}

}  // namespace grundylab
