#include "grundylab/cli/bench.hpp"

#include <algorithm>
#include <chrono>

#include "grundylab/cli/rule_spec.hpp"
#include "grundylab/maxnim.hpp"

namespace grundylab::cli {

namespace {

using Clock = std::chrono::steady_clock;

GrundyPrefix evaluate(const std::string& method, const RuleSequence& rule, Natural n) {
  if (method == "fast") return fast_grundy(rule, n);
  if (method == "naive") return naive_grundy(rule, n);
  if (method == "closed") return closed_grundy(rule, n);
  throw UsageError("unknown bench method '" + method + "'; expected fast, naive or closed");
}

MethodTiming time_method(const std::string& method, const RuleSequence& rule, Natural n,
                         double min_seconds) {
  MethodTiming timing;
  double total = 0.0;
  double best = 0.0;
  // Repeat short runs so that fast methods at small n are measurable.
  while (timing.runs == 0 || (total < min_seconds && timing.runs < 10000)) {
    const auto start = Clock::now();
    const GrundyPrefix out = evaluate(method, rule, n);
    const auto stop = Clock::now();
    const double elapsed = std::chrono::duration<double>(stop - start).count();
    best = timing.runs == 0 ? elapsed : std::min(best, elapsed);
    total += elapsed;
    ++timing.runs;
    if (out.size() != n) throw Error(ErrorCode::kMismatch, method + " returned a short prefix");
  }
  timing.seconds = best;
  timing.terms_per_second =
      timing.seconds > 0 ? static_cast<double>(n) / timing.seconds : 0.0;
  return timing;
}

}  // namespace

BenchReport run_bench(const RuleSequence& rule, const std::string& rule_text,
                      const std::vector<Natural>& sizes,
                      const std::vector<std::string>& methods,
                      double min_seconds_per_method) {
  if (methods.empty()) throw UsageError("bench needs at least one method");
  BenchReport report;
  report.rule = rule_text;
  for (Natural n : sizes) {
    // Correctness gate: every method must agree before anything is timed.
    const GrundyPrefix reference = evaluate(methods.front(), rule, n);
    for (std::size_t m = 1; m < methods.size(); ++m) {
      const GrundyPrefix other = evaluate(methods[m], rule, n);
      for (Natural i = 0; i < n; ++i) {
        if (other[i] != reference[i]) {
          throw Error(ErrorCode::kMismatch,
                      methods[m] + " and " + methods.front() + " differ at n = " +
                          std::to_string(i) + " (" + std::to_string(other[i]) + " vs " +
                          std::to_string(reference[i]) + ")",
                      i);
        }
      }
    }
    BenchRow row;
    row.n_terms = n;
    for (const auto& method : methods) {
      row.methods[method] = time_method(method, rule, n, min_seconds_per_method);
    }
    if (row.methods.contains("fast") && row.methods.contains("naive") &&
        row.methods["fast"].seconds > 0) {
      row.speedup = row.methods["naive"].seconds / row.methods["fast"].seconds;
    }
    report.rows.push_back(std::move(row));
  }
  report.verified = true;
  return report;
}

nlohmann::json BenchReport::to_json() const {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json methods_json = nlohmann::json::object();
    for (const auto& [name, t] : row.methods) {
      methods_json[name] = {{"seconds", t.seconds},
                            {"runs", t.runs},
                            {"terms_per_second", t.terms_per_second}};
    }
    nlohmann::json entry = {{"n_terms", row.n_terms}, {"methods", methods_json}};
    if (row.speedup > 0) entry["speedup"] = row.speedup;
    results.push_back(entry);
  }
  return {{"rule", rule}, {"verified", verified}, {"results", results}};
}

}  // namespace grundylab::cli
