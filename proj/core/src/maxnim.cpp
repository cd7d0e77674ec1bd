#include "grundylab/maxnim.hpp"

#include <algorithm>
#include <bit>

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

}  // namespace

GrundyPrefix naive_grundy(const RuleSequence& rule, Natural n_terms) {
  check_terms(rule, n_terms);
  std::vector<Natural> g(n_terms, 0);
  // stamp[v] == n marks value v as seen while computing g_n.
  std::vector<Natural> stamp;
  for (Natural n = 1; n < n_terms; ++n) {
    const Natural reach = rule(n);
    if (stamp.size() < reach + 1) stamp.resize(reach + 1, 0);
    for (Natural i = 1; i <= reach; ++i) {
      const Natural v = g[n - i];
      if (v <= reach) stamp[v] = n;
    }
    Natural m = 0;
    while (m <= reach && stamp[m] == n) ++m;
    g[n] = m;
  }
  return {std::move(g), rule, Game::kMaximum, Method::kNaive};
}

GrundyPrefix fast_grundy(const RuleSequence& rule, Natural n_terms) {
  check_terms(rule, n_terms);
  // One pass, carrying f'(n-1) and f(n-1) instead of materializing f'.
  std::vector<Natural> g(n_terms, 0);
  Natural prev_raw = rule(0);
  Natural prev = prev_raw;
  for (Natural n = 1; n < n_terms; ++n) {
    const Natural raw = rule(n);
    if (raw < prev_raw) {
      throw Error(ErrorCode::kNotWeaklyIncreasing,
                  "f(" + std::to_string(n) + ") < f(" + std::to_string(n - 1) + ")", n);
    }
    const Natural f = std::min(raw, prev + 1);
    g[n] = f > prev ? f : g[n - f - 1];
    prev_raw = raw;
    prev = f;
  }
  return {std::move(g), rule, Game::kMaximum, Method::kFast};
}

GrundyPrefix grundy(const RuleSequence& rule, Natural n_terms) {
  check_terms(rule, n_terms);
  if (is_weakly_increasing(rule, n_terms - 1)) return fast_grundy(rule, n_terms);
  return naive_grundy(rule, n_terms);
}

Natural closed_half(Natural n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "closed_half needs n >= 1");
  const int z = std::countr_zero(n);
  return (n >> z) >> 1;
}

Natural closed_pow2(Natural n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "closed_pow2 needs n >= 1");
  if ((n & (n + 1)) == 0) return 0;  // 2^m - 1
  const int top = std::bit_width(n) - 1;
  int p = top - 1;
  while ((n >> p) & 1) --p;  // first zero below the leading run of ones
  const Natural low = n & ((Natural{1} << p) - 1);
  return (Natural{1} << p) | low;
}

GrundyPrefix closed_grundy(const RuleSequence& rule, Natural n_terms) {
  check_terms(rule, n_terms);
  Natural (*closed)(Natural) = nullptr;
  if (rule.kind() == RuleKind::kHalf) {
    closed = closed_half;
  } else if (rule.kind() == RuleKind::kPow2) {
    closed = closed_pow2;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "closed form exists only for the half and pow2 rules");
  }
  std::vector<Natural> g(n_terms, 0);
  for (Natural n = 1; n < n_terms; ++n) g[n] = closed(n);
  return {std::move(g), rule, Game::kMaximum, Method::kClosedForm};
}

std::vector<Natural> first_instances(std::span<const Natural> values) {
  constexpr Natural kAbsent = ~Natural{0};
  std::vector<Natural> first;
  for (std::size_t n = 0; n < values.size(); ++n) {
    const Natural v = values[n];
    // A value larger than the prefix length cannot belong to the contiguous
    // run 0..K-1.
    if (v >= values.size()) continue;
    if (first.size() <= v) first.resize(v + 1, kAbsent);
    if (first[v] == kAbsent) first[v] = n;
  }
  auto gap = std::find(first.begin(), first.end(), kAbsent);
  first.erase(gap, first.end());
  return first;
}

RuleSequence canonical_rule(std::span<const Natural> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty prefix");
  }
  if (values[0] != 0) {
    throw Error(ErrorCode::kNotFractal, "prefix must start with 0", 0);
  }
  std::vector<Natural> f;
  f.reserve(values.size());
  Natural running = 0;
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (values[n] > running + 1) {
      throw Error(ErrorCode::kNotFractal,
                  "value " + std::to_string(values[n]) + " at position " +
                      std::to_string(n) + " appears before " +
                      std::to_string(running + 1),
                  n);
    }
    running = std::max(running, values[n]);
    f.push_back(running);
  }
  return RuleSequence::table(std::move(f));
}

std::optional<Move> sum_position_move(std::span<const Natural> heaps,
                                      const RuleSequence& rule) {
  if (heaps.empty()) return std::nullopt;
  const Natural largest = *std::max_element(heaps.begin(), heaps.end());
  const GrundyPrefix g = grundy(rule, largest + 1);
  Natural total = 0;
  for (Natural h : heaps) total ^= g[h];
  if (total == 0) return std::nullopt;
  for (std::size_t i = 0; i < heaps.size(); ++i) {
    const Natural m = heaps[i];
    const Natural target = total ^ g[m];
    const Natural reach = rule(m);
    for (Natural r = reach; r >= 1; --r) {
      if (g[m - r] == target) return Move{i, m - r};
    }
  }
  // Unreachable: Sprague-Grundy guarantees a move to every smaller value.
  throw Error(ErrorCode::kNotFound, "no move reaches nim-sum zero");
}

}  // namespace grundylab
