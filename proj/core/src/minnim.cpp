#include "grundylab/minnim.hpp"

#include <algorithm>

#include "grundylab/maxnim.hpp"

namespace grundylab {

namespace {

void check_terms(const RuleSequence& rule, Natural n_terms) {
  if (n_terms == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one term");
  }
  if (n_terms - 1 > rule.horizon()) {
    throw Error(ErrorCode::kHorizonExceeded,
                std::to_string(n_terms) + " terms exceed rule horizon " +
                    std::to_string(rule.horizon()),
                n_terms - 1);
  }
}

std::vector<Natural> expand_jumps(const std::vector<Natural>& jumps, Natural n_terms) {
  std::vector<Natural> h(n_terms, 0);
  Natural level = 0;
  std::size_t next = 1;
  for (Natural n = 0; n < n_terms; ++n) {
    while (next < jumps.size() && jumps[next] == n) {
      level = next++;
    }
    h[n] = level;
  }
  return h;
}

}  // namespace

GrundyPrefix naive_min_grundy(const RuleSequence& rule, Natural n_terms) {
  check_terms(rule, n_terms);
  std::vector<Natural> h(n_terms, 0);
  // prefix_mex[k] = mex{h_0, ..., h_{k-1}}, extended as h grows.
  std::vector<Natural> prefix_mex{0};
  prefix_mex.reserve(n_terms + 1);
  std::vector<bool> present;
  Natural current = 0;
  for (Natural n = 0; n < n_terms; ++n) {
    const Natural reach = n - rule(n);  // terms h_0 .. h_{reach-1}
    h[n] = prefix_mex[reach];
    if (present.size() <= h[n]) present.resize(h[n] + 1, false);
    present[h[n]] = true;
    while (current < present.size() && present[current]) ++current;
    prefix_mex.push_back(current);
  }
  return {std::move(h), rule, Game::kMinimum, Method::kNaive};
}

Natural q_of(const RuleSequence& rule, Natural k) {
  // j - f(j) <= j, so the search starts at k + 1.
  for (Natural j = k + 1; j <= rule.horizon() && j != 0; ++j) {
    if (j - rule(j) > k) return j;
  }
  throw Error(ErrorCode::kQUndefined,
              "no j <= " + std::to_string(rule.horizon()) + " with j - f(j) > " +
                  std::to_string(k),
              k);
}

std::vector<Natural> min_grundy_jumps(const RuleSequence& rule, Natural n_terms) {
  check_terms(rule, n_terms);
  const RuleCheck regular = is_regular(rule, n_terms - 1);
  if (!regular) {
    throw Error(ErrorCode::kNotRegular,
                "Minimum Nim fast path needs a regular rule; fails at n = " +
                    std::to_string(*regular.witness),
                regular.witness);
  }
  std::vector<Natural> jumps{0};
  Natural k = 0;
  for (Natural j = 1; j < n_terms; ++j) {
    if (j - rule(j) > k) {
      jumps.push_back(j);
      k = j;
    }
  }
  return jumps;
}

GrundyPrefix fast_min_grundy(const RuleSequence& rule, Natural n_terms) {
  const std::vector<Natural> jumps = min_grundy_jumps(rule, n_terms);
  return {expand_jumps(jumps, n_terms), rule, Game::kMinimum, Method::kFast};
}

GrundyPrefix min_from_max(const GrundyPrefix& max_prefix) {
  std::vector<Natural> h(max_prefix.size(), 0);
  Natural zeros = 0;
  for (std::size_t n = 1; n < max_prefix.size(); ++n) {
    if (max_prefix[n] == 0) ++zeros;
    h[n] = zeros;
  }
  return {std::move(h), max_prefix.rule, Game::kMinimum, Method::kFromMaxZeros};
}

std::pair<Natural, Natural> pair_encode(const RuleSequence& rule, Natural n) {
  const Natural terms = checked_add(n, 1);
  return {fast_grundy(rule, terms)[n], fast_min_grundy(rule, terms)[n]};
}

PairTable pair_table(const RuleSequence& rule, Natural n_terms) {
  const GrundyPrefix g = fast_grundy(rule, n_terms);
  const GrundyPrefix h = fast_min_grundy(rule, n_terms);
  PairTable table{{}, rule};
  table.entries.reserve(n_terms);
  for (Natural n = 0; n < n_terms; ++n) table.entries.push_back({n, g[n], h[n]});
  return table;
}

Natural zero_offset(std::span<const Natural> g, Natural i) {
  Natural zeros = 0;
  for (std::size_t n = 0; n < g.size(); ++n) {
    if (g[n] == i) return zeros;
    if (n > 0 && g[n] == 0) ++zeros;
  }
  throw Error(ErrorCode::kNotFound,
              "value " + std::to_string(i) + " does not occur in the first " +
                  std::to_string(g.size()) + " terms",
              i);
}

namespace {

struct DecodeStart {
  GrundyPrefix g;
  Natural first = 0;   // ĝ(i)
  Natural offset = 0;  // s_{0i}
};

DecodeStart decode_start(const RuleSequence& rule, Natural i, Natural j,
                         Natural search_bound) {
  const Natural terms = std::min(checked_add(search_bound, 1), checked_add(rule.horizon(), 1));
  DecodeStart start{fast_grundy(rule, terms)};
  const auto first = std::find(start.g.values.begin(), start.g.values.end(), i);
  if (first == start.g.values.end()) {
    throw Error(ErrorCode::kNotFound,
                "value " + std::to_string(i) + " does not occur up to " +
                    std::to_string(terms - 1),
                i);
  }
  start.first = first - start.g.values.begin();
  start.offset = zero_offset(start.g.view(), i);
  if (j < start.offset) {
    throw Error(ErrorCode::kPairOutOfRange,
                "(" + std::to_string(i) + ", " + std::to_string(j) + ") has j < s_0i = " +
                    std::to_string(start.offset),
                j);
  }
  return start;
}

}  // namespace

Natural pair_decode(const RuleSequence& rule, Natural i, Natural j, Natural search_bound) {
  const DecodeStart start = decode_start(rule, i, j, search_bound);
  const GrundyPrefix h = fast_min_grundy(rule, start.g.size());
  for (Natural n = start.first; n < h.size() && h[n] <= j; ++n) {
    if (start.g[n] == i && h[n] == j) return n;
  }
  throw Error(ErrorCode::kNotFound,
              "(" + std::to_string(i) + ", " + std::to_string(j) + ") lies beyond " +
                  std::to_string(search_bound),
              search_bound);
}

Natural pair_decode_via_q(const RuleSequence& rule, Natural i, Natural j,
                          Natural search_bound) {
  const DecodeStart start = decode_start(rule, i, j, search_bound);
  Natural n = start.first;
  for (Natural step = start.offset; step < j; ++step) {
    n = q_of(rule, n);
    if (n > search_bound) {
      throw Error(ErrorCode::kNotFound,
                  "(" + std::to_string(i) + ", " + std::to_string(j) + ") lies beyond " +
                      std::to_string(search_bound),
                  search_bound);
    }
  }
  return n;
}

PairArrays build_arrays(const RuleSequence& rule, Natural rows, Natural cols,
                        Natural max_terms) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "array shape must be at least 1 x 1");
  }
  const Natural cap = std::min(max_terms, rule.horizon() == ~Natural{0}
                                              ? rule.horizon()
                                              : rule.horizon() + 1);
  Natural terms = std::min<Natural>(64, cap);
  while (true) {
    const GrundyPrefix g = fast_grundy(rule, terms);
    const std::vector<Natural> jumps = min_grundy_jumps(rule, terms);
    const std::vector<Natural> first = first_instances(g.view());
    if (jumps.size() > cols && first.size() >= rows) {
      const Natural window = jumps[cols];  // ĥ(cols)
      PairArrays out{rule, rows, cols, {}, {}};
      out.left_justified.window = window;
      out.left_justified.covers_window = false;
      out.left_justified.rows.resize(rows);
      for (Natural i = 0; i < rows; ++i) {
        out.offset_rows.push_back({i, zero_offset(g.view(), i), {}});
      }
      for (Natural n = 0; n < window; ++n) {
        if (g[n] < rows) {
          out.offset_rows[g[n]].entries.push_back(n);
          out.left_justified.rows[g[n]].push_back(n);
        }
      }
      return out;
    }
    if (terms >= cap) {
      throw Error(ErrorCode::kInsufficientWindow,
                  std::to_string(terms) + " terms do not fill a " + std::to_string(rows) +
                      " x " + std::to_string(cols) + " array",
                  terms);
    }
    terms = std::min(cap, terms * 2);
  }
}

}  // namespace grundylab
