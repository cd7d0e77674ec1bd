#pragma once

// Maximum Nim: from a pile of m stones a player removes between 1 and f(m).
//
// Grundy values satisfy g_n = mex{g_{n-1}, ..., g_{n-f(n)}}. naive_grundy
// evaluates that recurrence for any rule. fast_grundy is linear for weakly
// increasing rules: it regularizes f to f' and applies
//
//   g_n = f'(n)                 if f'(n) > f'(n-1)
//   g_n = g_{n - f'(n) - 1}     otherwise.

#include <optional>
#include <span>
#include <vector>

#include "grundylab/rule.hpp"

namespace grundylab {

// Throws kHorizonExceeded if n_terms - 1 > rule.horizon(), kInvalidArgument if
// n_terms == 0.
GrundyPrefix naive_grundy(const RuleSequence& rule, Natural n_terms);

// Throws kNotWeaklyIncreasing (witness = least n with f(n) < f(n-1)) for
// rules outside its domain rather than returning wrong values.
GrundyPrefix fast_grundy(const RuleSequence& rule, Natural n_terms);

// fast_grundy for weakly increasing rules, naive_grundy otherwise.
GrundyPrefix grundy(const RuleSequence& rule, Natural n_terms);

// Closed form for the half rule: drop the lowest set bit of n and the zeros
// below it, then shift right once. closed_half(0b10100) == 0b10.
Natural closed_half(Natural n);

// Closed form for the pow2 rule: n = (1 1^k 0 b)_2 maps to (1 b)_2, and
// n = 2^m - 1 maps to 0.
Natural closed_pow2(Natural n);

// Prefix of the half or pow2 Grundy sequence from the closed forms.
// Throws kInvalidArgument for other rules.
GrundyPrefix closed_grundy(const RuleSequence& rule, Natural n_terms);

// ĝ(0), ĝ(1), ...: position of the first instance of each value, for the
// values 0, 1, ..., K-1 where K is the least value absent from the prefix.
std::vector<Natural> first_instances(std::span<const Natural> values);

// f(n) = max(g_0, ..., g_n). The prefix must start with 0 and introduce new
// values in increasing order (F2); throws kNotFractal with the offending
// position otherwise.
RuleSequence canonical_rule(std::span<const Natural> values);

struct Move {
  std::size_t heap = 0;
  Natural new_size = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

// A move in a disjunctive sum of Maximum Nim piles that leaves nim-sum zero,
// choosing the lowest heap index and then the largest removal. Returns
// nullopt exactly when the position already has nim-sum zero.
std::optional<Move> sum_position_move(std::span<const Natural> heaps,
                                      const RuleSequence& rule);

}  // namespace grundylab
