#include "grundylab/cli/verify.hpp"

#include <algorithm>
#include <set>

#include "grundylab/cli/rule_spec.hpp"
#include "grundylab/maxnim.hpp"
#include "grundylab/minnim.hpp"
#include "grundylab/serialnim.hpp"

namespace grundylab::cli {

namespace {

Verdict compare(std::span<const Natural> got, std::span<const Natural> want,
                const std::string& got_name, const std::string& want_name) {
  const std::size_t n = std::min(got.size(), want.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (got[i] != want[i]) {
      return Verdict::fail(i, got_name + " = " + std::to_string(got[i]) + " but " + want_name +
                                  " = " + std::to_string(want[i]) + " at index " +
                                  std::to_string(i));
    }
  }
  if (got.size() != want.size()) {
    return Verdict::fail(n, "lengths differ: " + std::to_string(got.size()) + " vs " +
                                std::to_string(want.size()));
  }
  return Verdict::pass();
}

const RuleSequence& require_rule(const VerifyInput& input, const std::string& what) {
  if (!input.rule) throw UsageError("verify " + what + " needs --rule");
  return *input.rule;
}

std::vector<Natural> input_sequence(const VerifyInput& input, const std::string& what) {
  if (input.sequence) return *input.sequence;
  const RuleSequence& rule = require_rule(input, what);
  return grundy(rule, input.n_terms).values;
}

// The Minimum Nim results assume a regular rule; a weakly increasing rule is
// replaced by its regularization, which leaves Maximum Nim values unchanged.
RuleSequence regular_counterpart(const RuleSequence& rule, Natural n_terms) {
  if (is_regular(rule, n_terms - 1)) return rule;
  return regularize(rule, n_terms - 1);
}

void verify_fractal(const VerifyInput& input, VerifyReport& report) {
  const std::vector<Natural> g = input_sequence(input, report.what);
  report.window = g.size();
  const FractalVerdict fractal = check_fractal(g);
  report.checks.push_back({"F2: first instances in increasing order", fractal.f2});
  report.checks.push_back({"F3: deleting first instances returns the sequence", fractal.f3});
  report.checks.push_back({"infinitive", fractal.infinitive});
  if (fractal.f2.passed()) {
    const RuleSequence canonical = canonical_rule(g);
    const GrundyPrefix replay = naive_grundy(canonical, g.size());
    report.checks.push_back({"running-maximum rule reproduces the sequence",
                             compare(replay.values, g, "replay", "sequence")});
  }
}

void verify_interspersion(const VerifyInput& input, VerifyReport& report) {
  const std::vector<Natural> g = input_sequence(input, report.what);
  report.window = g.size();
  const Verdict prefix = check_interspersion_prefix(g);
  const Verdict array = check_interspersion_array(associated_array(g));
  report.checks.push_back({"pairwise restrictions alternate", prefix});
  report.checks.push_back({"associated array is an interspersion", array});
  Verdict agree = Verdict::pass();
  if (prefix.passed() != array.passed()) {
    agree = Verdict::fail(0, "sequence and array checks disagree");
  }
  report.checks.push_back({"sequence and array characterizations agree", agree});
}

void verify_minimax(const VerifyInput& input, VerifyReport& report) {
  const RuleSequence& rule = require_rule(input, report.what);
  const Natural n = input.n_terms;
  report.window = n;
  const RuleSequence regular = regular_counterpart(rule, n);
  const GrundyPrefix g = fast_grundy(rule, n);
  const GrundyPrefix h_fast = fast_min_grundy(regular, n);
  const GrundyPrefix h_naive = naive_min_grundy(regular, n);

  report.checks.push_back({"Minimum Nim: q-chain equals the recurrence",
                           compare(h_fast.values, h_naive.values, "fast", "naive")});

  Verdict regular_h = Verdict::pass();
  for (Natural i = 1; i < n; ++i) {
    if (h_naive[i] < h_naive[i - 1] || h_naive[i] - h_naive[i - 1] > 1) {
      regular_h = Verdict::fail(i, "h jumps by more than one");
      break;
    }
  }
  report.checks.push_back({"h is regular", regular_h});

  report.checks.push_back({"h_n counts zeros of g in (0, n]",
                           compare(min_from_max(g).values, h_naive.values, "zero count", "h")});

  // q(m) for every m whose image lies in the window; q is nondecreasing.
  std::vector<Natural> q;
  for (Natural j = 1; j < n; ++j) {
    while (q.size() < j - regular(j)) q.push_back(j);
  }
  Verdict dispersion = Verdict::pass();
  for (Natural m = 0; m < q.size(); ++m) {
    if (g[q[m]] != g[m]) {
      dispersion = Verdict::fail(m, "g_q(m) = " + std::to_string(g[q[m]]) + " but g_m = " +
                                        std::to_string(g[m]));
      break;
    }
  }
  report.checks.push_back({"g_q(m) = g_m", dispersion});

  std::vector<Natural> chain;
  for (Natural z = 0; z < q.size() && q[z] < n;) {
    z = q[z];
    chain.push_back(z);
  }
  std::vector<Natural> zeros;
  for (Natural i = 1; i < n; ++i) {
    if (g[i] == 0) zeros.push_back(i);
  }
  report.checks.push_back({"zeros of g sit at q(0), q(q(0)), ...",
                           compare(zeros, chain, "zero position", "q-iterate")});
}

void verify_bijection(const VerifyInput& input, VerifyReport& report) {
  const RuleSequence& rule = require_rule(input, report.what);
  const Natural n = input.n_terms;
  report.window = n;
  const GrundyPrefix g = fast_grundy(rule, n);
  const GrundyPrefix h = fast_min_grundy(regular_counterpart(rule, n), n);

  std::set<std::pair<Natural, Natural>> seen;
  Verdict injective = Verdict::pass();
  for (Natural i = 0; i < n; ++i) {
    if (!seen.emplace(g[i], h[i]).second) {
      injective = Verdict::fail(i, "pair (" + std::to_string(g[i]) + ", " +
                                       std::to_string(h[i]) + ") repeats at n = " +
                                       std::to_string(i));
      break;
    }
  }
  report.checks.push_back({"n -> (g_n, h_n) is injective", injective});

  // Zero blocks j < h_{N-1} lie entirely inside the window, so every pair
  // (i, j) with s_{0i} <= j < h_{N-1} must occur.
  const Natural complete_blocks = h[n - 1];
  const std::vector<Natural> first = first_instances(g.view());
  std::vector<Natural> offsets;
  Verdict surjective = Verdict::pass();
  for (Natural i = 0; i < first.size() && surjective.passed(); ++i) {
    offsets.push_back(zero_offset(g.view(), i));
    for (Natural j = offsets.back(); j < complete_blocks; ++j) {
      if (!seen.contains({i, j})) {
        surjective = Verdict::fail(i, "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                          ") missing although its zero block is complete");
        break;
      }
    }
  }
  report.checks.push_back({"every pair (i, j >= s_0i) in complete blocks occurs", surjective});

  // a_{ij}: the (h_n - s_{0i})-th instance of i is n.
  std::vector<Natural> occurrences(first.size(), 0);
  Verdict shifted = Verdict::pass();
  for (Natural i = 0; i < n; ++i) {
    const Natural v = g[i];
    if (v >= offsets.size()) continue;
    if (h[i] - offsets[v] != occurrences[v]++) {
      shifted = Verdict::fail(i, "position " + std::to_string(i) + " is not instance h_n - s_0i of " +
                                     std::to_string(v));
      break;
    }
  }
  report.checks.push_back({"left-justified pair array is the associated array", shifted});
  report.checks.push_back({"associated array is an interspersion",
                           check_interspersion_array(associated_array(g.view()))});
}

void verify_triangle_roundtrip(const VerifyInput& input, VerifyReport& report) {
  const std::vector<Natural> g = input_sequence(input, report.what);
  report.window = g.size();
  const FractalVerdict fractal = check_fractal(g);
  if (!fractal.f2.passed()) {
    report.checks.push_back({"F2: first instances in increasing order", fractal.f2});
    return;
  }
  const SubadditiveTriangle triangle = triangle_of(g, input.max_dim);
  report.checks.push_back({"triangle is subadditive", validate_triangle(triangle)});
  if (!report.checks.back().verdict.passed()) return;

  const std::vector<Natural> sums = triangle.column_sums();
  std::vector<Natural> first = first_instances(g);
  first.resize(std::min(first.size(), sums.size()));
  std::vector<Natural> predicted{0};
  for (Natural j = 1; j < sums.size(); ++j) predicted.push_back(sums[j] + 1);
  report.checks.push_back({"first instance of j sits at 1 + c_j",
                           compare(first, predicted, "first instance", "1 + c_j")});

  const SubadditiveTriangle rebuilt =
      from_column_sums(std::span<const Natural>(sums).subspan(sums.empty() ? 0 : 1));
  report.checks.push_back({"column sums determine the triangle",
                           rebuilt == triangle ? Verdict::pass()
                                               : Verdict::fail(0, "rebuilt triangle differs")});

  const std::vector<Natural> restored = sequence_from_triangle(triangle);
  const std::span<const Natural> determined =
      std::span<const Natural>(g).first(std::min<std::size_t>(restored.size(), g.size()));
  report.checks.push_back({"triangle reconstructs the sequence",
                           compare(restored.size() > g.size()
                                       ? std::span<const Natural>(restored).first(g.size())
                                       : std::span<const Natural>(restored),
                                   determined, "reconstructed", "input")});
  report.checks.push_back({"triangle of the reconstruction is the triangle",
                           triangle_of(restored, input.max_dim) == triangle
                               ? Verdict::pass()
                               : Verdict::fail(0, "triangle changed on roundtrip")});
}

void verify_serial_oracle(const VerifyInput& input, VerifyReport& report) {
  Verdict closed = Verdict::pass();
  Verdict range = Verdict::pass();
  Verdict moves = Verdict::pass();
  Natural count = 0;
  std::vector<Natural> heaps;
  // Odometer over all rows of 1..max_heaps heaps of sizes 1..max_size.
  for (Natural k = 1; k <= input.max_heaps; ++k) {
    heaps.assign(k, 1);
    while (true) {
      ++count;
      const SerialPosition position{heaps};
      const Natural value = serial_grundy(position);
      const Natural oracle = serial_grundy_oracle(position);
      std::string text;
      for (Natural a : heaps) text += (text.empty() ? "" : ",") + std::to_string(a);
      if (value != oracle && closed.passed()) {
        closed = Verdict::fail(count, "[" + text + "]: closed form " + std::to_string(value) +
                                          ", game tree " + std::to_string(oracle));
      }
      if (oracle != heaps[0] && oracle + 1 != heaps[0] && range.passed()) {
        range = Verdict::fail(count, "[" + text + "] has value " + std::to_string(oracle));
      }
      const auto move = serial_winning_move(position);
      if (move.has_value() == (oracle == 0) && moves.passed()) {
        moves = Verdict::fail(count, "[" + text + "]: move presence disagrees with value");
      } else if (move && moves.passed()) {
        SerialPosition after{heaps};
        after.heaps[0] = *move;
        if (serial_grundy_oracle(after) != 0) {
          moves = Verdict::fail(count, "[" + text + "]: move to " + std::to_string(*move) +
                                           " does not reach value 0");
        }
      }
      Natural digit = 0;
      while (digit < k && heaps[digit] == input.max_size) heaps[digit++] = 1;
      if (digit == k) break;
      ++heaps[digit];
    }
  }
  report.window = count;
  report.checks.push_back({"closed form equals game tree", closed});
  report.checks.push_back({"value is a_1 or a_1 - 1", range});
  report.checks.push_back({"winning moves reach value 0", moves});
}

}  // namespace

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const NamedCheck& c) {
    return c.verdict.status == Status::kFail;
  });
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& check : checks) {
    nlohmann::json item = {{"name", check.name},
                           {"status", to_string(check.verdict.status)},
                           {"detail", check.verdict.detail}};
    item["witness"] = check.verdict.witness ? nlohmann::json(*check.verdict.witness)
                                            : nlohmann::json(nullptr);
    list.push_back(item);
  }
  return {{"what", what}, {"window", window}, {"passed", passed()}, {"checks", list}};
}

VerifyReport run_verification(const std::string& what, const VerifyInput& input) {
  VerifyReport report;
  report.what = what;
  if (what != "serial-oracle" && !input.sequence && input.n_terms == 0) {
    throw UsageError("verify " + what + " needs --n or --input");
  }
  if (what == "fractal") {
    verify_fractal(input, report);
  } else if (what == "interspersion") {
    verify_interspersion(input, report);
  } else if (what == "minimax") {
    verify_minimax(input, report);
  } else if (what == "bijection") {
    verify_bijection(input, report);
  } else if (what == "triangle-roundtrip") {
    verify_triangle_roundtrip(input, report);
  } else if (what == "serial-oracle") {
    verify_serial_oracle(input, report);
  } else {
    throw UsageError("unknown verification '" + what +
                     "'; expected fractal, interspersion, minimax, bijection, "
                     "triangle-roundtrip or serial-oracle");
  }
  return report;
}

}  // namespace grundylab::cli
