#include "grundylab/rule.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace grundylab {

Natural mex(std::span<const Natural> values) {
  // The mex of k values is at most k.
  std::vector<bool> present(values.size() + 1, false);
  for (Natural v : values) {
    if (v < present.size()) present[v] = true;
  }
  Natural k = 0;
  while (present[k]) ++k;
  return k;
}

std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::kHalf: return "half";
    case RuleKind::kSqrt: return "sqrt";
    case RuleKind::kPow2: return "pow2";
    case RuleKind::kTable: return "table";
    case RuleKind::kSerial: return "serial";
  }
  return "unknown";
}

std::string_view to_string(Game game) {
  return game == Game::kMaximum ? "maximum" : "minimum";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kNaive: return "naive";
    case Method::kFast: return "fast";
    case Method::kClosedForm: return "closed";
    case Method::kFromTriangle: return "from-triangle";
    case Method::kFromMaxZeros: return "from-max-zeros";
  }
  return "unknown";
}

Natural isqrt(Natural n) {
  auto r = static_cast<Natural>(std::sqrt(static_cast<long double>(n)));
  // Correct the floating-point estimate in both directions.
  while (r > 0 && (r > n / r)) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

RuleSequence::RuleSequence(RuleKind kind, Natural horizon,
                           std::shared_ptr<const std::vector<Natural>> data,
                           std::shared_ptr<const std::vector<Natural>> cumulative)
    : kind_(kind),
      horizon_(horizon),
      data_(std::move(data)),
      cumulative_(std::move(cumulative)) {}

RuleSequence RuleSequence::half(Natural horizon) {
  return RuleSequence(RuleKind::kHalf, horizon, nullptr, nullptr);
}

RuleSequence RuleSequence::sqrt(Natural horizon) {
  return RuleSequence(RuleKind::kSqrt, horizon, nullptr, nullptr);
}

RuleSequence RuleSequence::pow2(Natural horizon) {
  return RuleSequence(RuleKind::kPow2, horizon, nullptr, nullptr);
}

RuleSequence RuleSequence::table(std::vector<Natural> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidRule, "rule table is empty");
  }
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (values[n] > n) {
      throw Error(ErrorCode::kInvalidRule,
                  "f(" + std::to_string(n) + ") = " + std::to_string(values[n]) +
                      " violates 0 <= f(n) <= n",
                  n);
    }
  }
  const Natural horizon = values.size() - 1;
  return RuleSequence(RuleKind::kTable, horizon,
                      std::make_shared<const std::vector<Natural>>(std::move(values)),
                      nullptr);
}

RuleSequence RuleSequence::serial(std::vector<Natural> heaps) {
  if (heaps.empty()) {
    throw Error(ErrorCode::kInvalidRule, "serial rule needs at least one heap");
  }
  std::vector<Natural> cumulative{0};
  cumulative.reserve(heaps.size() + 1);
  for (std::size_t i = 0; i < heaps.size(); ++i) {
    if (heaps[i] == 0) {
      throw Error(ErrorCode::kInvalidRule,
                  "serial heap " + std::to_string(i) + " is empty", i);
    }
    cumulative.push_back(checked_add(cumulative.back(), heaps[i]));
  }
  const Natural horizon = cumulative.back();
  return RuleSequence(
      RuleKind::kSerial, horizon,
      std::make_shared<const std::vector<Natural>>(std::move(heaps)),
      std::make_shared<const std::vector<Natural>>(std::move(cumulative)));
}

Natural RuleSequence::operator()(Natural n) const {
  if (n > horizon_) {
    throw Error(ErrorCode::kHorizonExceeded,
                "f(" + std::to_string(n) + ") requested beyond horizon " +
                    std::to_string(horizon_),
                n);
  }
  switch (kind_) {
    case RuleKind::kHalf:
      return n == 0 ? 0 : (n - 1) / 2;
    case RuleKind::kSqrt:
      return isqrt(n);
    case RuleKind::kPow2:
      return n == 0 ? 0 : std::bit_floor(n) - 1;
    case RuleKind::kTable:
      return (*data_)[n];
    case RuleKind::kSerial: {
      if (n == 0) return 0;
      // Block k covers (cumulative[k-1], cumulative[k]].
      const auto& c = *cumulative_;
      auto it = std::lower_bound(c.begin(), c.end(), n);
      return n - *(it - 1);
    }
  }
  return 0;
}

std::span<const Natural> RuleSequence::table_values() const {
  if (kind_ != RuleKind::kTable) return {};
  return *data_;
}

std::span<const Natural> RuleSequence::heaps() const {
  if (kind_ != RuleKind::kSerial) return {};
  return *data_;
}

RuleSequence RuleSequence::with_horizon(Natural horizon) const {
  if ((kind_ == RuleKind::kTable || kind_ == RuleKind::kSerial) &&
      horizon > horizon_) {
    throw Error(ErrorCode::kHorizonExceeded,
                "cannot extend a " + std::string(to_string(kind_)) +
                    " rule beyond its horizon " + std::to_string(horizon_));
  }
  RuleSequence copy = *this;
  copy.horizon_ = horizon;
  return copy;
}

std::string RuleSequence::name() const {
  if (kind_ != RuleKind::kSerial) return std::string(to_string(kind_));
  std::string out = "serial:";
  for (std::size_t i = 0; i < data_->size(); ++i) {
    if (i) out += ',';
    out += std::to_string((*data_)[i]);
  }
  return out;
}

Natural eval_rule(const RuleSequence& rule, Natural n) { return rule(n); }

namespace {

void require_within(const RuleSequence& rule, Natural upto) {
  if (upto > rule.horizon()) {
    throw Error(ErrorCode::kHorizonExceeded,
                "window [0, " + std::to_string(upto) + "] exceeds horizon " +
                    std::to_string(rule.horizon()),
                upto);
  }
}

}  // namespace

RuleCheck is_regular(const RuleSequence& rule, Natural upto) {
  require_within(rule, upto);
  Natural prev = rule(0);
  for (Natural n = 1; n <= upto; ++n) {
    const Natural cur = rule(n);
    if (cur < prev || cur - prev > 1) return {false, n};
    prev = cur;
  }
  return {};
}

RuleCheck is_weakly_increasing(const RuleSequence& rule, Natural upto) {
  require_within(rule, upto);
  Natural prev = rule(0);
  for (Natural n = 1; n <= upto; ++n) {
    const Natural cur = rule(n);
    if (cur < prev) return {false, n};
    prev = cur;
  }
  return {};
}

std::vector<Natural> regularized_values(const RuleSequence& rule, Natural upto) {
  require_within(rule, upto);
  std::vector<Natural> out;
  out.reserve(upto + 1);
  out.push_back(rule(0));
  Natural prev_raw = out.back();
  for (Natural n = 1; n <= upto; ++n) {
    const Natural raw = rule(n);
    if (raw < prev_raw) {
      throw Error(ErrorCode::kNotWeaklyIncreasing,
                  "f(" + std::to_string(n) + ") < f(" + std::to_string(n - 1) + ")",
                  n);
    }
    prev_raw = raw;
    out.push_back(std::min(raw, out.back() + 1));
  }
  return out;
}

RuleSequence regularize(const RuleSequence& rule, Natural upto) {
  return RuleSequence::table(regularized_values(rule, upto));
}

}  // namespace grundylab
