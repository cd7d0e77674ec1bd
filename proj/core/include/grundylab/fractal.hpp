#pragma once

// Fractal sequences and their equivalent descriptions: the self-similarity
// operator Λ, interspersion (as a sequence property and as an array
// property), restrictions to value sets, and subadditive triangles.
//
// The objects are infinite; everything here inspects a finite prefix (the
// "window"). Violations found on a window are exact. Absence of violations is
// reported as a pass on that window, and properties no prefix can decide
// (every value recurring forever) are reported as undetermined.

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grundylab/error.hpp"

namespace grundylab {

enum class Status { kPass, kFail, kUndetermined };

std::string_view to_string(Status status);

struct Verdict {
  Status status = Status::kPass;
  // Position in the inspected sequence (or array entry) where a failure shows.
  std::optional<Natural> witness;
  // The pair of values involved, for pairwise properties.
  std::optional<std::pair<Natural, Natural>> values;
  std::string detail;

  bool passed() const noexcept { return status == Status::kPass; }

  static Verdict pass() { return {}; }
  static Verdict fail(Natural witness, std::string detail) {
    return {Status::kFail, witness, std::nullopt, std::move(detail)};
  }
  static Verdict undetermined(std::string detail) {
    return {Status::kUndetermined, std::nullopt, std::nullopt, std::move(detail)};
  }
};

// Λ: delete the first occurrence of every value. Deleting first occurrences
// commutes with truncation, so the result is exact.
std::vector<Natural> lambda_op(std::span<const Natural> values);

struct FractalVerdict {
  Verdict f2;          // first instances appear in increasing order of value
  Verdict f3;          // Λ(g) agrees with g on the length of Λ(g)
  Verdict infinitive;  // always undetermined on a prefix
  Natural window = 0;

  bool passed() const noexcept { return f2.passed() && f3.passed(); }
};

FractalVerdict check_fractal(std::span<const Natural> values);

// A set of values: either finite or given by a membership predicate (for
// sets like "all even values").
class ValueSet {
 public:
  ValueSet(std::initializer_list<Natural> values) : finite_(values) {}
  explicit ValueSet(std::set<Natural> values) : finite_(std::move(values)) {}
  static ValueSet where(std::function<bool(Natural)> predicate);

  bool contains(Natural v) const;
  bool is_finite() const noexcept { return !predicate_; }
  const std::set<Natural>& elements() const noexcept { return finite_; }

 private:
  ValueSet() = default;
  std::set<Natural> finite_;
  std::function<bool(Natural)> predicate_;
};

// g|M: the terms whose value lies in M, in order.
std::vector<Natural> restrict_to(std::span<const Natural> values, const ValueSet& set);

// g|M with the k-th smallest element of M replaced by k.
std::vector<Natural> relabel(std::span<const Natural> values, const ValueSet& set);

// For every pair i < j with j present: some i precedes the first j, and after
// the first j the restriction to {i, j} alternates.
Verdict check_interspersion_prefix(std::span<const Natural> values);

// rows[i] lists, increasingly, the positions n < window holding value i.
// `covers_window` says every position below `window` lies in some row; it is
// false for arrays restricted to a subset of the values.
struct AssociatedArray {
  std::vector<std::vector<Natural>> rows;
  Natural window = 0;
  bool covers_window = true;

  friend bool operator==(const AssociatedArray&, const AssociatedArray&) = default;
};

AssociatedArray associated_array(std::span<const Natural> values);

// Increasing rows, disjointness (and coverage when claimed), increasing
// columns, and the interspersion axiom
//
//   a_{ij} < a_{kl} < a_{i,j+1}  implies  a_{i,j+1} < a_{k,l+1} < a_{i,j+2}
//
// where entries missing from the array are known only to be >= window.
Verdict check_interspersion_array(const AssociatedArray& array);

struct Periodicity {
  Verdict verdict;
  Natural preperiod = 0;  // index into g|M where periodic behaviour starts
  Natural period = 0;
};

// Least preperiod after which g|M repeats with period #M, each period being a
// permutation of M. Needs a finite nonempty M; throws kInsufficientWindow
// when the window does not show two full periods or misses a value of M.
Periodicity check_restriction_periodicity(std::span<const Natural> values,
                                          const std::set<Natural>& set);

// Strictly upper-triangular array s_{ij}, 0 <= i < j < dim. Row i stores
// s_{i,i+1}, ..., s_{i,dim-1}.
class SubadditiveTriangle {
 public:
  SubadditiveTriangle() = default;
  // Throws kInvalidTriangle unless row i has rows.size() - i entries.
  explicit SubadditiveTriangle(std::vector<std::vector<Natural>> rows);

  Natural dim() const noexcept { return rows_.size() + 1; }
  Natural at(Natural i, Natural j) const;
  const std::vector<std::vector<Natural>>& rows() const noexcept { return rows_; }

  // c_j = s_{0j} + ... + s_{j-1,j} for 0 <= j < dim; c_0 = 0.
  std::vector<Natural> column_sums() const;

  friend bool operator==(const SubadditiveTriangle&,
                         const SubadditiveTriangle&) = default;

 private:
  std::vector<std::vector<Natural>> rows_;
};

// s_{ij} = instances of i before the first instance of j, not counting
// g_0 = 0. The prefix must satisfy F2 (kNotFractal otherwise). dim is the
// number of values first seen in the window, capped by max_dim.
SubadditiveTriangle triangle_of(std::span<const Natural> values,
                                std::optional<Natural> max_dim = std::nullopt);

// s_{ij} + s_{jk} - 1 <= s_{ik} <= s_{ij} + s_{jk} for all i < j < k, and
// c_1 < c_2 < ... < c_{dim-1}.
Verdict validate_triangle(const SubadditiveTriangle& triangle);

// Rebuilds the triangle from c_1, ..., c_{d-1}, solving
//   s_{ij} = (c_j - c_i + s_{i,i+1} + ... + s_{i,j-1} - e) / j
// with the unique e in [-i, j-1-i] that makes the division exact. Throws
// kUnrealizable when the result is not a subadditive triangle with those
// column sums.
SubadditiveTriangle from_column_sums(std::span<const Natural> sums);

// Number of terms a triangle determines: ĝ(dim-1) + 1 = c_{dim-1} + 2.
Natural determined_length(const SubadditiveTriangle& triangle);

// The fractal sequence with first instances ĝ(0) = 0, ĝ(j) = 1 + c_j, filled
// by g_n = g_{n-k-1} for ĝ(k) < n < ĝ(k+1). Throws kInvalidTriangle on an
// invalid triangle and kInsufficientWindow past determined_length().
std::vector<Natural> sequence_from_triangle(const SubadditiveTriangle& triangle,
                                            std::optional<Natural> n_terms = std::nullopt);

}  // namespace grundylab
