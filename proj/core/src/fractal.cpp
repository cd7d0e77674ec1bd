#include "grundylab/fractal.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace grundylab {

namespace {

constexpr Natural kMissing = std::numeric_limits<Natural>::max();

std::string pair_text(Natural i, Natural j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

Natural max_value(std::span<const Natural> values) {
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

std::vector<std::vector<Natural>> positions_by_value(std::span<const Natural> values) {
  std::vector<std::vector<Natural>> rows(values.empty() ? 0 : max_value(values) + 1);
  for (std::size_t n = 0; n < values.size(); ++n) rows[values[n]].push_back(n);
  return rows;
}

Natural entry_or_missing(const std::vector<Natural>& row, std::size_t k) {
  return k < row.size() ? row[k] : kMissing;
}

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kUndetermined: return "undetermined";
  }
  return "unknown";
}

std::vector<Natural> lambda_op(std::span<const Natural> values) {
  std::vector<bool> seen(values.empty() ? 0 : max_value(values) + 1, false);
  std::vector<Natural> out;
  out.reserve(values.size());
  for (Natural v : values) {
    if (seen[v]) {
      out.push_back(v);
    } else {
      seen[v] = true;
    }
  }
  return out;
}

FractalVerdict check_fractal(std::span<const Natural> values) {
  FractalVerdict verdict;
  verdict.window = values.size();
  verdict.infinitive =
      Verdict::undetermined("recurrence of every value cannot be decided on a prefix");

  // F2: a new value must equal the number of distinct values seen so far.
  Natural distinct = 0;
  std::vector<bool> seen(values.empty() ? 0 : max_value(values) + 1, false);
  for (std::size_t n = 0; n < values.size(); ++n) {
    const Natural v = values[n];
    if (seen[v]) continue;
    if (v != distinct) {
      verdict.f2 = Verdict::fail(
          n, "first instance of " + std::to_string(v) + " at position " +
                 std::to_string(n) + " precedes the first instance of " +
                 std::to_string(distinct));
      break;
    }
    seen[v] = true;
    ++distinct;
  }

  const std::vector<Natural> reduced = lambda_op(values);
  for (std::size_t k = 0; k < reduced.size(); ++k) {
    if (reduced[k] != values[k]) {
      verdict.f3 = Verdict::fail(
          k, "Λ(g) differs from g at index " + std::to_string(k) + ": " +
                 std::to_string(reduced[k]) + " vs " + std::to_string(values[k]));
      break;
    }
  }
  return verdict;
}

ValueSet ValueSet::where(std::function<bool(Natural)> predicate) {
  ValueSet set;
  set.predicate_ = std::move(predicate);
  return set;
}

bool ValueSet::contains(Natural v) const {
  return predicate_ ? predicate_(v) : finite_.contains(v);
}

std::vector<Natural> restrict_to(std::span<const Natural> values, const ValueSet& set) {
  std::vector<Natural> out;
  for (Natural v : values) {
    if (set.contains(v)) out.push_back(v);
  }
  return out;
}

std::vector<Natural> relabel(std::span<const Natural> values, const ValueSet& set) {
  // rank[v] = #{m in M : m < v}, needed only for values that occur.
  const Natural top = values.empty() ? 0 : max_value(values);
  std::vector<Natural> rank(top + 1, 0);
  Natural count = 0;
  for (Natural v = 0; v <= top; ++v) {
    rank[v] = count;
    if (set.contains(v)) ++count;
  }
  std::vector<Natural> out;
  for (Natural v : values) {
    if (set.contains(v)) out.push_back(rank[v]);
  }
  return out;
}

Verdict check_interspersion_prefix(std::span<const Natural> values) {
  const auto rows = positions_by_value(values);
  for (Natural j = 1; j < rows.size(); ++j) {
    const auto& row_j = rows[j];
    if (row_j.empty()) continue;
    for (Natural i = 0; i < j; ++i) {
      const auto& row_i = rows[i];
      Verdict bad;
      bad.status = Status::kFail;
      bad.values = std::make_pair(i, j);
      if (row_i.empty() || row_i.front() > row_j.front()) {
        bad.witness = row_j.front();
        bad.detail = "pair " + pair_text(i, j) + ": " + std::to_string(j) +
                     " at position " + std::to_string(row_j.front()) +
                     " precedes every " + std::to_string(i);
        return bad;
      }
      // Merge the two position lists; after the first j the symbols alternate.
      std::size_t a = 0;
      std::size_t b = 0;
      bool started = false;
      bool last_is_j = false;
      while (a < row_i.size() || b < row_j.size()) {
        const bool take_j =
            b < row_j.size() && (a >= row_i.size() || row_j[b] < row_i[a]);
        const Natural pos = take_j ? row_j[b++] : row_i[a++];
        if (started && take_j == last_is_j) {
          bad.witness = pos;
          bad.detail = "pair " + pair_text(i, j) + ": two consecutive " +
                       std::to_string(take_j ? j : i) + "s after the first " +
                       std::to_string(j) + ", at position " + std::to_string(pos);
          return bad;
        }
        if (take_j) started = true;
        last_is_j = take_j;
      }
    }
  }
  return Verdict::pass();
}

AssociatedArray associated_array(std::span<const Natural> values) {
  return {positions_by_value(values), values.size(), true};
}

Verdict check_interspersion_array(const AssociatedArray& array) {
  const auto& rows = array.rows;
  const Natural window = array.window;

  // Rows increasing, in range, disjoint.
  std::vector<bool> used(window, false);
  Natural count = 0;
  for (Natural i = 0; i < rows.size(); ++i) {
    for (std::size_t l = 0; l < rows[i].size(); ++l) {
      const Natural a = rows[i][l];
      if (a >= window) {
        return Verdict::fail(a, "row " + std::to_string(i) + " holds " +
                                    std::to_string(a) + " outside the window");
      }
      if (l > 0 && rows[i][l - 1] >= a) {
        return Verdict::fail(a, "row " + std::to_string(i) + " is not increasing at column " +
                                    std::to_string(l));
      }
      if (used[a]) {
        return Verdict::fail(a, "position " + std::to_string(a) + " appears twice");
      }
      used[a] = true;
      ++count;
    }
  }
  if (array.covers_window && count != window) {
    const auto hole = std::find(used.begin(), used.end(), false) - used.begin();
    return Verdict::fail(hole, "position " + std::to_string(hole) + " is in no row");
  }

  // Columns increasing; a missing entry above a present one is a violation.
  for (Natural i = 0; i + 1 < rows.size(); ++i) {
    const auto& upper = rows[i];
    const auto& lower = rows[i + 1];
    for (std::size_t l = 0; l < lower.size(); ++l) {
      if (l >= upper.size() || upper[l] > lower[l]) {
        Verdict bad = Verdict::fail(
            lower[l], "column " + std::to_string(l) + " decreases between rows " +
                          std::to_string(i) + " and " + std::to_string(i + 1));
        bad.values = std::make_pair(i, i + 1);
        return bad;
      }
    }
  }

  // Interspersion axiom for every ordered pair of rows (i, k). For fixed
  // a_{kl} the index j with a_{ij} < a_{kl} < a_{i,j+1} is unique, so a
  // two-pointer sweep visits every premise once.
  for (Natural i = 0; i < rows.size(); ++i) {
    const auto& row_i = rows[i];
    if (row_i.empty()) continue;
    for (Natural k = 0; k < rows.size(); ++k) {
      if (k == i) continue;
      const auto& row_k = rows[k];
      std::size_t below = 0;  // entries of row i smaller than a_{kl}
      for (std::size_t l = 0; l < row_k.size(); ++l) {
        const Natural a_kl = row_k[l];
        while (below < row_i.size() && row_i[below] < a_kl) ++below;
        if (below == 0) continue;
        const Natural next_i = entry_or_missing(row_i, below);
        const Natural next_k = entry_or_missing(row_k, l + 1);
        const Natural after_i = entry_or_missing(row_i, below + 1);
        // next_i < next_k, then next_k < after_i. Two missing entries are
        // incomparable; a missing entry exceeds every present one.
        const bool first_bad = next_k != kMissing && (next_i == kMissing || next_i > next_k);
        const bool second_bad = after_i != kMissing && (next_k == kMissing || next_k > after_i);
        if (first_bad || second_bad) {
          Verdict bad = Verdict::fail(
              a_kl, "axiom fails for rows " + pair_text(i, k) + " at a_{" +
                        std::to_string(k) + "," + std::to_string(l) +
                        "} = " + std::to_string(a_kl));
          bad.values = std::make_pair(std::min(i, k), std::max(i, k));
          return bad;
        }
      }
    }
  }
  return Verdict::pass();
}

Periodicity check_restriction_periodicity(std::span<const Natural> values,
                                          const std::set<Natural>& set) {
  if (set.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "periodicity needs a nonempty value set");
  }
  Periodicity result;
  result.period = set.size();

  const Verdict inter = check_interspersion_prefix(values);
  if (!inter.passed()) {
    result.verdict = inter;
    result.verdict.detail = "not an interspersion on the window: " + inter.detail;
    return result;
  }

  const std::vector<Natural> r = restrict_to(values, ValueSet(set));
  for (Natural m : set) {
    if (std::find(r.begin(), r.end(), m) == r.end()) {
      throw Error(ErrorCode::kInsufficientWindow,
                  "value " + std::to_string(m) + " does not occur in the window");
    }
  }
  const std::size_t p = set.size();
  std::size_t start = 0;
  for (std::size_t n = 0; n + p < r.size(); ++n) {
    if (r[n] != r[n + p]) start = n + 1;
  }
  if (r.size() < start + 2 * p) {
    throw Error(ErrorCode::kInsufficientWindow,
                "restriction of length " + std::to_string(r.size()) +
                    " does not show two periods after index " + std::to_string(start));
  }
  std::set<Natural> block(r.begin() + start, r.begin() + start + p);
  if (block != set) {
    result.verdict = Verdict::fail(start, "periodic block is not a permutation of M");
    return result;
  }
  result.preperiod = start;
  result.verdict = Verdict::pass();
  return result;
}

SubadditiveTriangle::SubadditiveTriangle(std::vector<std::vector<Natural>> rows)
    : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != rows_.size() - i) {
      throw Error(ErrorCode::kInvalidTriangle,
                  "row " + std::to_string(i) + " has " + std::to_string(rows_[i].size()) +
                      " entries, expected " + std::to_string(rows_.size() - i),
                  i);
    }
  }
}

Natural SubadditiveTriangle::at(Natural i, Natural j) const {
  if (!(i < j && j < dim())) {
    throw Error(ErrorCode::kInvalidArgument,
                "s" + pair_text(i, j) + " outside a triangle of dim " + std::to_string(dim()));
  }
  return rows_[i][j - i - 1];
}

std::vector<Natural> SubadditiveTriangle::column_sums() const {
  std::vector<Natural> sums(dim(), 0);
  for (Natural i = 0; i < rows_.size(); ++i) {
    for (Natural j = i + 1; j < dim(); ++j) {
      sums[j] = checked_add(sums[j], rows_[i][j - i - 1]);
    }
  }
  return sums;
}

SubadditiveTriangle triangle_of(std::span<const Natural> values,
                                std::optional<Natural> max_dim) {
  const FractalVerdict fractal = check_fractal(values);
  if (!fractal.f2.passed()) {
    throw Error(ErrorCode::kNotFractal, fractal.f2.detail, fractal.f2.witness);
  }
  if (values.empty()) return {};
  Natural dim = max_value(values) + 1;
  if (max_dim) dim = std::min(dim, *max_dim);
  if (dim == 0) {
    throw Error(ErrorCode::kInvalidArgument, "triangle dimension must be positive");
  }

  std::vector<std::vector<Natural>> rows(dim - 1);
  for (Natural i = 0; i + 1 < dim; ++i) rows[i].reserve(dim - 1 - i);
  std::vector<Natural> count(dim, 0);
  Natural next = 1;  // next value whose first instance is pending
  for (std::size_t n = 1; n < values.size() && next < dim; ++n) {
    const Natural v = values[n];
    if (v == next) {
      for (Natural i = 0; i < next; ++i) rows[i].push_back(count[i]);
      ++next;
    }
    if (v < dim) ++count[v];
  }
  return SubadditiveTriangle(std::move(rows));
}

Verdict validate_triangle(const SubadditiveTriangle& triangle) {
  const Natural d = triangle.dim();
  const auto& rows = triangle.rows();
  for (Natural i = 0; i < d; ++i) {
    for (Natural j = i + 1; j < d; ++j) {
      const Natural s_ij = rows[i][j - i - 1];
      for (Natural k = j + 1; k < d; ++k) {
        const Natural upper = checked_add(s_ij, rows[j][k - j - 1]);
        const Natural s_ik = rows[i][k - i - 1];
        if (s_ik > upper || s_ik + 1 < upper) {
          Verdict bad = Verdict::fail(
              k, "s" + pair_text(i, k) + " = " + std::to_string(s_ik) +
                     " outside [s_ij + s_jk - 1, s_ij + s_jk] = [" +
                     std::to_string(upper - (upper > 0 ? 1 : 0)) + ", " +
                     std::to_string(upper) + "] with j = " + std::to_string(j));
          bad.values = std::make_pair(i, k);
          return bad;
        }
      }
    }
  }
  const std::vector<Natural> sums = triangle.column_sums();
  for (Natural j = 2; j < d; ++j) {
    if (sums[j] <= sums[j - 1]) {
      return Verdict::fail(j, "column sums not increasing: c_" + std::to_string(j - 1) +
                                  " = " + std::to_string(sums[j - 1]) + ", c_" +
                                  std::to_string(j) + " = " + std::to_string(sums[j]));
    }
  }
  return Verdict::pass();
}

SubadditiveTriangle from_column_sums(std::span<const Natural> sums) {
  __extension__ using Wide = __int128;
  const std::size_t d = sums.size() + 1;
  for (std::size_t j = 1; j < sums.size(); ++j) {
    if (sums[j] <= sums[j - 1]) {
      throw Error(ErrorCode::kUnrealizable,
                  "column sums must increase strictly from c_1 on", j + 1);
    }
  }
  const auto c = [&](std::size_t j) -> Wide { return j == 0 ? 0 : Wide(sums[j - 1]); };

  std::vector<std::vector<Natural>> rows(d - 1);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    Wide partial = 0;  // s_{i,i+1} + ... + s_{i,j-1}
    for (std::size_t j = i + 1; j < d; ++j) {
      const Wide base = c(j) - c(i) + partial;
      const Wide jj = static_cast<Wide>(j);
      Wide residue = base % jj;
      if (residue < 0) residue += jj;
      // Exactly one e in [-i, j-1-i] is congruent to base mod j.
      const Wide e = residue <= static_cast<Wide>(j - 1 - i) ? residue : residue - jj;
      const Wide s = (base - e) / jj;
      if (s < 0) {
        throw Error(ErrorCode::kUnrealizable,
                    "entry s" + pair_text(i, j) + " would be negative", j);
      }
      if (s > static_cast<Wide>(std::numeric_limits<Natural>::max())) {
        throw Error(ErrorCode::kOverflow, "entry s" + pair_text(i, j) + " exceeds 64 bits");
      }
      rows[i].push_back(static_cast<Natural>(s));
      partial += s;
    }
  }
  SubadditiveTriangle triangle(std::move(rows));
  const std::vector<Natural> check = triangle.column_sums();
  for (std::size_t j = 1; j < d; ++j) {
    if (check[j] != sums[j - 1]) {
      throw Error(ErrorCode::kUnrealizable,
                  "no subadditive triangle has column sum c_" + std::to_string(j) + " = " +
                      std::to_string(sums[j - 1]),
                  j);
    }
  }
  const Verdict valid = validate_triangle(triangle);
  if (!valid.passed()) {
    throw Error(ErrorCode::kUnrealizable, valid.detail, valid.witness);
  }
  return triangle;
}

Natural determined_length(const SubadditiveTriangle& triangle) {
  if (triangle.dim() < 2) return 1;
  return checked_add(triangle.column_sums().back(), 2);
}

std::vector<Natural> sequence_from_triangle(const SubadditiveTriangle& triangle,
                                            std::optional<Natural> n_terms) {
  const Verdict valid = validate_triangle(triangle);
  if (!valid.passed()) {
    throw Error(ErrorCode::kInvalidTriangle, valid.detail, valid.witness);
  }
  const Natural limit = determined_length(triangle);
  const Natural length = n_terms.value_or(limit);
  if (length > limit) {
    throw Error(ErrorCode::kInsufficientWindow,
                "a triangle of dim " + std::to_string(triangle.dim()) + " determines " +
                    std::to_string(limit) + " terms, " + std::to_string(length) +
                    " requested");
  }
  const std::vector<Natural> sums = triangle.column_sums();
  std::vector<Natural> g;
  g.reserve(length);
  Natural top = 0;   // largest value placed so far
  Natural next = 1;  // next value to place at its first instance 1 + c_next
  for (Natural n = 0; n < length; ++n) {
    if (n == 0) {
      g.push_back(0);
    } else if (next < triangle.dim() && n == sums[next] + 1) {
      g.push_back(next);
      top = next++;
    } else {
      g.push_back(g[n - top - 1]);
    }
  }
  return g;
}

}  // namespace grundylab
