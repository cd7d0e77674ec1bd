#include "grundylab/serialnim.hpp"

#include <algorithm>
#include <string>

#include "grundylab/maxnim.hpp"
#include "grundylab/rule.hpp"

namespace grundylab {

namespace {

void require_positive(const SerialPosition& position) {
  if (position.heaps.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "serial position has no heaps");
  }
  for (std::size_t i = 0; i < position.heaps.size(); ++i) {
    if (position.heaps[i] == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "heap " + std::to_string(i + 1) + " is empty", i);
    }
  }
}

// [a, b] by the running mex of [0, b], [1, b], ...
Natural bracket(Natural a, Natural b) {
  if (a == 0) return b;
  // Among a values the mex never exceeds a, so larger values can be ignored.
  std::vector<bool> present(a + 2, false);
  if (b < present.size()) present[b] = true;
  Natural current = 0;
  Natural value = b;
  for (Natural x = 1; x <= a; ++x) {
    while (present[current]) ++current;
    value = current;
    present[value] = true;
  }
  return value;
}

}  // namespace

Natural serial_grundy(const SerialPosition& position) {
  require_positive(position);
  const auto& a = position.heaps;
  const Natural first = a.front();
  std::size_t m = 1;  // 0-based index of a_m, sentinel at a.size()
  while (m < a.size() && a[m] == first) ++m;
  const Natural a_m = m < a.size() ? a[m] : 0;
  const bool odd = (m + 1) % 2 == 1;
  if ((odd && a_m < first) || (!odd && a_m > first)) return first - 1;
  return first;
}

Natural serial_grundy_oracle(const SerialPosition& position, Natural size_bound) {
  Natural total = 0;
  for (Natural h : position.heaps) {
    total = checked_add(total, h);
    if (total > size_bound) {
      throw Error(ErrorCode::kSizeBound,
                  "position holds more than " + std::to_string(size_bound) + " stones");
    }
  }
  Natural value = 0;  // the empty row
  for (auto it = position.heaps.rbegin(); it != position.heaps.rend(); ++it) {
    value = bracket(*it, value);
  }
  return value;
}

std::vector<Natural> two_heap_values(Natural b, Natural max_a) {
  std::vector<Natural> values{b};
  for (Natural a = 1; a <= max_a; ++a) values.push_back(mex(values));
  return values;
}

std::optional<Natural> serial_winning_move(const SerialPosition& position) {
  if (serial_grundy(position) == 0) return std::nullopt;
  SerialPosition rest{{position.heaps.begin() + 1, position.heaps.end()}};
  for (Natural i = position.heaps.front(); i-- > 0;) {
    Natural value = 0;
    if (i > 0) {
      SerialPosition next = rest;
      next.heaps.insert(next.heaps.begin(), i);
      value = serial_grundy(next);
    } else if (!rest.heaps.empty()) {
      value = serial_grundy(rest);
    }
    if (value == 0) return i;
  }
  throw Error(ErrorCode::kNotFound, "no move to a zero position");
}

Natural smallest_nim_grundy(std::span<const Natural> heaps) {
  if (heaps.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "Smallest Nim needs at least one heap");
  }
  SerialPosition sorted{{heaps.begin(), heaps.end()}};
  std::sort(sorted.heaps.begin(), sorted.heaps.end());
  return serial_grundy(sorted);
}

std::vector<Natural> serial_row_for_pile(std::span<const Natural> heaps, Natural n,
                                         RowConvention convention) {
  Natural total = 0;
  for (Natural a : heaps) total = checked_add(total, a);
  if (n == 0 || n > total) {
    throw Error(ErrorCode::kInvalidArgument,
                "pile " + std::to_string(n) + " outside 1.." + std::to_string(total), n);
  }
  // k heaps are used up entirely; the pile is inside heap k + 1.
  std::size_t k = 0;
  Natural used = 0;
  if (convention == RowConvention::kUpperInclusive) {
    while (used + heaps[k] < n) used += heaps[k++];
  } else {
    while (k < heaps.size() && used + heaps[k] <= n) used += heaps[k++];
  }
  std::vector<Natural> row{n - used};
  for (std::size_t i = k; i-- > 0;) row.push_back(heaps[i]);
  if (row.front() == 0) row.erase(row.begin());
  return row;
}

SerialEquivalence check_serial_maxnim_equivalence(std::span<const Natural> heaps, Natural n) {
  const RuleSequence rule = RuleSequence::serial({heaps.begin(), heaps.end()});
  if (n == 0 || n > rule.horizon()) {
    throw Error(ErrorCode::kInvalidArgument,
                "pile " + std::to_string(n) + " outside 1.." + std::to_string(rule.horizon()), n);
  }
  SerialEquivalence out;
  out.maximum_nim = naive_grundy(rule, n + 1)[n];
  out.row = serial_row_for_pile(heaps, n);
  out.serial_nim = serial_grundy_oracle(SerialPosition{out.row});
  out.equal = out.maximum_nim == out.serial_nim;
  return out;
}

}  // namespace grundylab
