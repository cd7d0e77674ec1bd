#pragma once

// Minimum Nim: from a pile of m stones a player removes strictly more than
// f(m). Grundy values satisfy h_n = mex{h_0, ..., h_{n-f(n)-1}}.
//
// For a regular rule the sequence h is itself regular and its jumps are the
// chain ĥ(0) = 0, ĥ(k) = q(ĥ(k-1)) with q(k) = min{j : j - f(j) > k}. The
// same q links Maximum and Minimum Nim: h_n counts the zeros of g in (0, n],
// and n -> (g_n, h_n) is injective.

#include <span>
#include <utility>
#include <vector>

#include "grundylab/fractal.hpp"
#include "grundylab/rule.hpp"

namespace grundylab {

// Direct evaluation of the recurrence for any rule, O(n) via prefix mexes.
GrundyPrefix naive_min_grundy(const RuleSequence& rule, Natural n_terms);

// Least j <= horizon with j - f(j) > k; kQUndefined if there is none, which
// means n - f(n) does not grow past k within the horizon.
Natural q_of(const RuleSequence& rule, Natural k);

// ĥ(0), ĥ(1), ... up to position n_terms - 1, from the q chain. Requires a
// regular rule on the window (kNotRegular with witness otherwise).
std::vector<Natural> min_grundy_jumps(const RuleSequence& rule, Natural n_terms);

GrundyPrefix fast_min_grundy(const RuleSequence& rule, Natural n_terms);

// h_n = #{0 < k <= n : g_k = 0}.
GrundyPrefix min_from_max(const GrundyPrefix& max_prefix);

// (g_n, h_n).
std::pair<Natural, Natural> pair_encode(const RuleSequence& rule, Natural n);

struct PairEntry {
  Natural n = 0;
  Natural g = 0;
  Natural h = 0;

  friend bool operator==(const PairEntry&, const PairEntry&) = default;
};

struct PairTable {
  std::vector<PairEntry> entries;
  RuleSequence rule;
};

PairTable pair_table(const RuleSequence& rule, Natural n_terms);

// s_{0i}: zeros of g strictly between position 0 and the first instance of i.
// kNotFound if i does not occur in the prefix.
Natural zero_offset(std::span<const Natural> g, Natural i);

// The unique n <= search_bound with (g_n, h_n) = (i, j), found by scanning.
// kPairOutOfRange when j < s_{0i}; kNotFound when the answer lies beyond
// search_bound.
Natural pair_decode(const RuleSequence& rule, Natural i, Natural j, Natural search_bound);

// Same pair, reached by starting at ĝ(i) and applying q (j - s_{0i}) times.
// Only validated against pair_decode, not proved for rows i > 0.
Natural pair_decode_via_q(const RuleSequence& rule, Natural i, Natural j,
                          Natural search_bound);

struct OffsetRow {
  Natural value = 0;
  Natural offset = 0;             // s_{0i}; columns below it are blank
  std::vector<Natural> entries;   // columns offset, offset + 1, ..., cols - 1
};

// A'[i][j] = n with (g_n, h_n) = (i, j) for i < rows, j < cols, and A, the
// same rows left-justified. A is the associated array of g restricted to
// values below `rows`, over positions [0, ĥ(cols)).
struct PairArrays {
  RuleSequence rule;
  Natural rows = 0;
  Natural cols = 0;
  std::vector<OffsetRow> offset_rows;
  AssociatedArray left_justified;
};

// Grows the computed prefix (up to max_terms and the rule horizon) until h
// reaches `cols` and every value below `rows` has appeared; otherwise
// kInsufficientWindow.
PairArrays build_arrays(const RuleSequence& rule, Natural rows, Natural cols,
                        Natural max_terms = Natural{1} << 24);

}  // namespace grundylab
