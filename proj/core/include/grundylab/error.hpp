#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grundylab {

// Pile sizes, Grundy values, positions and counts. Overflow is an error,
// never a wraparound.
using Natural = std::uint64_t;

enum class ErrorCode {
  kInvalidArgument,
  kInvalidRule,          // f(n) > n, malformed table, empty serial heaps
  kHorizonExceeded,      // index beyond the rule's horizon
  kNotWeaklyIncreasing,  // fast paths need a monotone rule
  kNotRegular,
  kNotFractal,           // F2 violation where a fractal prefix is required
  kQUndefined,           // no j <= horizon with j - f(j) > k
  kPairOutOfRange,       // (i, j) with j < s_{0i}
  kNotFound,
  kUnrealizable,         // column sums that no subadditive triangle has
  kInvalidTriangle,
  kInsufficientWindow,
  kOverflow,
  kParse,
  kSizeBound,
  kMismatch,             // two evaluators disagree
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception. `witness` is the
// least offending index when the failure has one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<Natural> witness = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<Natural>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::optional<Natural> witness_;
};

// Checked arithmetic on Natural.
Natural checked_add(Natural a, Natural b);
Natural checked_mul(Natural a, Natural b);

}  // namespace grundylab
