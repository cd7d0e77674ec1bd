#pragma once

#include <map>
#include <string>
#include <vector>

#include "grundylab/rule.hpp"
#include "json.hpp"

namespace grundylab::cli {

struct MethodTiming {
  double seconds = 0.0;  // fastest wall time over the runs
  Natural runs = 0;
  double terms_per_second = 0.0;
};

struct BenchRow {
  Natural n_terms = 0;
  std::map<std::string, MethodTiming> methods;
  // naive time / fast time, when both were measured.
  double speedup = 0.0;
};

struct BenchReport {
  std::string rule;
  std::vector<BenchRow> rows;
  bool verified = false;

  nlohmann::json to_json() const;
};

// Times each method ("fast", "naive", "closed") at each size. Before any
// timing is recorded the methods' outputs are compared; a mismatch throws
// grundylab::Error(kMismatch) naming the first differing index, so no
// report exists for a wrong answer.
BenchReport run_bench(const RuleSequence& rule, const std::string& rule_text,
                      const std::vector<Natural>& sizes,
                      const std::vector<std::string>& methods,
                      double min_seconds_per_method = 0.05);

}  // namespace grundylab::cli
