#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grundylab/fractal.hpp"
#include "grundylab/rule.hpp"
#include "json.hpp"

namespace grundylab::cli {

struct NamedCheck {
  std::string name;
  Verdict verdict;
};

struct VerifyReport {
  std::string what;
  Natural window = 0;
  std::vector<NamedCheck> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

struct VerifyInput {
  std::optional<RuleSequence> rule;
  std::optional<std::vector<Natural>> sequence;  // replaces the rule's prefix
  Natural n_terms = 0;
  // serial-oracle sweep bounds
  Natural max_heaps = 4;
  Natural max_size = 6;
  // triangle-roundtrip: the triangle covers values below max_dim, keeping the
  // cubic subadditivity check affordable
  Natural max_dim = 256;
};

// what: fractal | interspersion | minimax | bijection | triangle-roundtrip |
// serial-oracle. Throws UsageError for an unknown suite or missing input.
VerifyReport run_verification(const std::string& what, const VerifyInput& input);

}  // namespace grundylab::cli
