#pragma once

// Rule sequences f with 0 <= f(n) <= n, Grundy-sequence prefixes, and the
// elementary operations on them (mex, regularity, regularization).
//
// Every sequence in this library is 0-indexed: position n is a pile of n
// stones and g_0 = 0. Printed tables that start "from n = 1" are offset by one.

#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grundylab/error.hpp"

namespace grundylab {

// Smallest natural not in `values` (duplicates allowed).
Natural mex(std::span<const Natural> values);

template <std::ranges::input_range R>
  requires(!std::convertible_to<R, std::span<const Natural>>)
Natural mex(R&& values) {
  std::vector<Natural> copy;
  for (auto&& v : values) copy.push_back(static_cast<Natural>(v));
  return mex(std::span<const Natural>(copy));
}

enum class RuleKind { kHalf, kSqrt, kPow2, kTable, kSerial };

std::string_view to_string(RuleKind kind);

// Horizon given to preset rules unless the caller chooses one.
inline constexpr Natural kDefaultPresetHorizon = Natural{1} << 40;

// The rule sequence f of a restricted Nim game, defined on [0, horizon].
//
//   half   f(n) = floor((n - 1) / 2),          f(0) = 0
//   sqrt   f(n) = floor(sqrt(n))
//   pow2   f(n) = (largest 2^k <= n) - 1,      f(0) = 0
//   table  explicit values f(0..N-1), horizon N - 1
//   serial f(0) = 0, then 1, 2, ..., a_1, 1, 2, ..., a_2, ...;
//          horizon a_1 + ... + a_k
//
// Immutable; copies share the underlying table.
class RuleSequence {
 public:
  static RuleSequence half(Natural horizon = kDefaultPresetHorizon);
  static RuleSequence sqrt(Natural horizon = kDefaultPresetHorizon);
  static RuleSequence pow2(Natural horizon = kDefaultPresetHorizon);
  // Throws kInvalidRule when the table is empty or some f(n) > n.
  static RuleSequence table(std::vector<Natural> values);
  // Throws kInvalidRule on empty heaps or a zero heap.
  static RuleSequence serial(std::vector<Natural> heaps);

  RuleKind kind() const noexcept { return kind_; }
  Natural horizon() const noexcept { return horizon_; }

  // f(n). Throws kHorizonExceeded when n > horizon().
  Natural operator()(Natural n) const;

  // Explicit table (kTable) or heap sizes (kSerial); empty otherwise.
  std::span<const Natural> table_values() const;
  std::span<const Natural> heaps() const;

  // Copy with a smaller horizon. Presets accept any horizon; table and serial
  // rules only shrink.
  RuleSequence with_horizon(Natural horizon) const;

  // "half", "sqrt", "pow2", "table", "serial:3,2".
  std::string name() const;

 private:
  RuleSequence(RuleKind kind, Natural horizon,
               std::shared_ptr<const std::vector<Natural>> data,
               std::shared_ptr<const std::vector<Natural>> cumulative);

  RuleKind kind_;
  Natural horizon_;
  std::shared_ptr<const std::vector<Natural>> data_;
  // Serial only: cumulative[k] = a_1 + ... + a_k, cumulative[0] = 0.
  std::shared_ptr<const std::vector<Natural>> cumulative_;
};

Natural eval_rule(const RuleSequence& rule, Natural n);

// Integer square root, exact for all 64-bit inputs.
Natural isqrt(Natural n);

struct RuleCheck {
  bool ok = true;
  // Least n in [1, upto] violating the property.
  std::optional<Natural> witness;

  explicit operator bool() const noexcept { return ok; }
};

// 0 <= f(n) - f(n-1) <= 1 for 1 <= n <= upto.
RuleCheck is_regular(const RuleSequence& rule, Natural upto);
// f(n-1) <= f(n) for 1 <= n <= upto.
RuleCheck is_weakly_increasing(const RuleSequence& rule, Natural upto);

// f'(0) = f(0), f'(n) = min(f(n), 1 + f'(n-1)). Requires a weakly increasing
// rule on [0, upto]; throws kNotWeaklyIncreasing with the witness otherwise.
std::vector<Natural> regularized_values(const RuleSequence& rule, Natural upto);
RuleSequence regularize(const RuleSequence& rule, Natural upto);

enum class Game { kMaximum, kMinimum };
enum class Method { kNaive, kFast, kClosedForm, kFromTriangle, kFromMaxZeros };

std::string_view to_string(Game game);
std::string_view to_string(Method method);

// A finite prefix g_0, ..., g_{N-1} with provenance.
struct GrundyPrefix {
  std::vector<Natural> values;
  std::optional<RuleSequence> rule;
  Game game = Game::kMaximum;
  Method method = Method::kNaive;

  std::size_t size() const noexcept { return values.size(); }
  Natural operator[](std::size_t n) const { return values[n]; }
  std::span<const Natural> view() const noexcept { return values; }
};

}  // namespace grundylab
