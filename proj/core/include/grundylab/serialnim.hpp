#pragma once

// Serial Nim: heaps a_1, ..., a_k in a row; a move reduces the leftmost
// nonempty heap. The value [a_1, ..., a_k] folds from the right,
// [a_1, ..., a_k] = [a_1, [a_2, ..., a_k]], with [0, b] = b and
// [a, b] = mex{[i, b] : 0 <= i < a}.

#include <optional>
#include <span>
#include <vector>

#include "grundylab/error.hpp"

namespace grundylab {

struct SerialPosition {
  std::vector<Natural> heaps;  // left to right
};

// Closed form. Let m be the first (1-based) index with a_m != a_1, using the
// implicit sentinel a_{k+1} = 0. The value is a_1 - 1 when m is odd and
// a_m < a_1 or m is even and a_m > a_1, and a_1 otherwise. Needs k >= 1 and
// all heaps positive (kInvalidArgument).
Natural serial_grundy(const SerialPosition& position);

// Game-tree value by the right-to-left fold. Zero heaps are allowed anywhere
// (an empty heap is skipped). Throws kSizeBound when the heaps total more
// than size_bound stones.
Natural serial_grundy_oracle(const SerialPosition& position,
                             Natural size_bound = Natural{1} << 26);

// [a, b] for a = 0, 1, ..., max_a, evaluated by the mex recurrence.
std::vector<Natural> two_heap_values(Natural b, Natural max_a);

// Largest i < a_1 such that reducing the leftmost heap to i (dropping it when
// i = 0) leaves a position of value 0; nullopt when the value is already 0.
std::optional<Natural> serial_winning_move(const SerialPosition& position);

// Smallest Nim: Serial Nim on the heaps sorted in nondecreasing order.
Natural smallest_nim_grundy(std::span<const Natural> heaps);

// Which side the boundary n = a_1 + ... + a_j falls on when mapping a
// Maximum Nim pile onto a Serial Nim row.
enum class RowConvention {
  kUpperInclusive,  // sum_{i<=k} < n <= sum_{i<=k+1}
  kLowerInclusive,  // sum_{i<=k} <= n < sum_{i<=k+1}; a leading 0 is dropped
};

// Serial Nim row equivalent to one Maximum Nim pile of n stones under the rule
// 1, 2, ..., a_1, 1, 2, ..., a_2, ...: [n - (a_1 + ... + a_k), a_k, ..., a_1].
// Needs 1 <= n <= a_1 + ... + a_len (kInvalidArgument otherwise).
std::vector<Natural> serial_row_for_pile(std::span<const Natural> heaps, Natural n,
                                         RowConvention convention = RowConvention::kUpperInclusive);

struct SerialEquivalence {
  bool equal = false;
  Natural maximum_nim = 0;   // naive_grundy with the serial rule, at n
  Natural serial_nim = 0;    // oracle value of the row
  std::vector<Natural> row;
};

SerialEquivalence check_serial_maxnim_equivalence(std::span<const Natural> heaps, Natural n);

}  // namespace grundylab
