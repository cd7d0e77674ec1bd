#include "grundylab/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "grundylab/cli/bench.hpp"
#include "grundylab/cli/formats.hpp"
#include "grundylab/cli/rule_spec.hpp"
#include "grundylab/cli/verify.hpp"
#include "grundylab/maxnim.hpp"
#include "grundylab/minnim.hpp"
#include "grundylab/serialnim.hpp"

namespace grundylab::cli {

namespace {

struct Options {
  std::string rule = "half";
  Natural n = 0;
  std::string method;
  std::string format;
  std::string what;
  std::string input;
  std::string output;
  std::string sums;
  std::string heaps;
  std::string sizes;
  std::string methods = "fast,naive";
  bool json = false;
  Natural dim = 10;
  Natural rows = 5;
  Natural cols = 7;
  Natural b = 1;
  Natural max_a = 10;
  Natural max_heaps = 4;
  Natural max_size = 6;
  Natural max_dim = 256;
};

Format output_format(const Options& opts, const RunOptions& run, Format redirected) {
  if (!opts.format.empty()) return parse_format(opts.format);
  return run.interactive ? Format::kTable : redirected;
}

std::string join(std::span<const Natural> values) {
  std::string text;
  for (Natural v : values) text += (text.empty() ? "" : ",") + std::to_string(v);
  return text;
}

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> words;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) words.push_back(item);
  }
  return words;
}

Natural require_n(const Options& opts, const std::string& command) {
  if (opts.n == 0) throw UsageError(command + " needs --n >= 1");
  return opts.n;
}

int cmd_max(const Options& opts, const RunOptions& run, std::ostream& out) {
  const RuleSequence rule = parse_rule_spec(opts.rule, default_horizon());
  const Natural n = require_n(opts, "max");
  const std::string method = opts.method.empty() ? "fast" : opts.method;
  GrundyPrefix prefix;
  if (method == "fast") {
    prefix = fast_grundy(rule, n);
  } else if (method == "naive") {
    prefix = naive_grundy(rule, n);
  } else if (method == "closed") {
    prefix = closed_grundy(rule, n);
  } else {
    throw UsageError("unknown method '" + method + "'; expected fast, naive or closed");
  }
  write_sequence(out, prefix, opts.rule, output_format(opts, run, Format::kCsv));
  return kExitOk;
}

int cmd_min(const Options& opts, const RunOptions& run, std::ostream& out) {
  const RuleSequence rule = parse_rule_spec(opts.rule, default_horizon());
  const Natural n = require_n(opts, "min");
  const std::string method = opts.method.empty() ? "fast" : opts.method;
  GrundyPrefix prefix;
  if (method == "fast") {
    prefix = fast_min_grundy(rule, n);
  } else if (method == "naive") {
    prefix = naive_min_grundy(rule, n);
  } else {
    throw UsageError("unknown method '" + method + "'; expected fast or naive");
  }
  write_sequence(out, prefix, opts.rule, output_format(opts, run, Format::kCsv));
  return kExitOk;
}

void write_report(std::ostream& out, const VerifyReport& report) {
  for (const auto& check : report.checks) {
    out << std::left << std::setw(13) << to_string(check.verdict.status) << check.name;
    if (!check.verdict.detail.empty()) out << ": " << check.verdict.detail;
    if (check.verdict.witness) out << " (witness " << *check.verdict.witness << ")";
    out << '\n';
  }
  out << "verify " << report.what << ": " << (report.passed() ? "pass" : "fail")
      << " (window " << report.window << ")\n";
}

int cmd_verify(const Options& opts, bool rule_given, std::ostream& out) {
  VerifyInput input;
  input.max_heaps = opts.max_heaps;
  input.max_size = opts.max_size;
  input.max_dim = opts.max_dim;
  if (!opts.input.empty()) {
    input.sequence = read_sequence_file(opts.input);
    input.n_terms = input.sequence->size();
    if (opts.n != 0 && opts.n < input.n_terms) {
      input.sequence->resize(opts.n);
      input.n_terms = opts.n;
    }
  } else {
    input.n_terms = opts.n == 0 ? 4096 : opts.n;
  }
  if (rule_given || opts.input.empty()) {
    input.rule = parse_rule_spec(opts.rule, default_horizon());
  }
  const VerifyReport report = run_verification(opts.what, input);
  if (opts.json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    write_report(out, report);
  }
  return report.passed() ? kExitOk : kExitFail;
}

// Enough of the rule's prefix to contain the first instances of 0..values-1.
std::vector<Natural> prefix_with_values(const RuleSequence& rule, Natural values) {
  const Natural cap = std::min<Natural>(Natural{1} << 24, rule.horizon());
  for (Natural n = 64;; n *= 2) {
    const Natural terms = std::min(n, cap + 1);
    GrundyPrefix prefix = grundy(rule, terms);
    if (first_instances(prefix.view()).size() >= values) return std::move(prefix.values);
    if (terms > cap) {
      throw Error(ErrorCode::kInsufficientWindow,
                  "the first " + std::to_string(terms) + " terms contain fewer than " +
                      std::to_string(values) + " distinct values");
    }
  }
}

void emit_triangle(const Options& opts, const RunOptions& run, std::ostream& out,
                   const SubadditiveTriangle& triangle) {
  std::ofstream file;
  std::ostream* sink = &out;
  Format fallback = Format::kJson;
  if (!opts.output.empty()) {
    file.open(opts.output);
    if (!file) throw Error(ErrorCode::kParse, "cannot write " + opts.output);
    sink = &file;
  } else if (run.interactive) {
    fallback = Format::kTable;
  }
  const Format format = opts.format.empty() ? fallback : parse_format(opts.format);
  if (format == Format::kCsv) throw UsageError("triangles are written as json or table");
  if (format == Format::kJson) {
    *sink << triangle_to_json(triangle).dump() << '\n';
  } else {
    write_triangle_text(*sink, triangle);
  }
}

int cmd_triangle(const std::string& action, const Options& opts, const RunOptions& run,
                 std::ostream& out) {
  if (action == "emit") {
    if (opts.dim == 0) throw UsageError("--dim must be at least 1");
    const RuleSequence rule = parse_rule_spec(opts.rule, default_horizon());
    // A D x D display has rows for values 0..D-1 and columns for 1..D.
    const std::vector<Natural> values =
        opts.n != 0 ? grundy(rule, opts.n).values : prefix_with_values(rule, opts.dim + 1);
    emit_triangle(opts, run, out, triangle_of(values, opts.dim + 1));
  } else if (action == "reconstruct") {
    if (opts.input.empty()) throw UsageError("triangle reconstruct needs --in");
    const SubadditiveTriangle triangle = read_triangle_file(opts.input);
    const Verdict valid = validate_triangle(triangle);
    if (!valid.passed()) throw Error(ErrorCode::kInvalidTriangle, valid.detail, valid.witness);
    GrundyPrefix prefix;
    prefix.values = opts.n != 0 ? sequence_from_triangle(triangle, opts.n)
                                : sequence_from_triangle(triangle);
    prefix.method = Method::kFromTriangle;
    write_sequence(out, prefix, "triangle", output_format(opts, run, Format::kCsv));
  } else if (action == "from-colsums") {
    if (opts.sums.empty()) throw UsageError("triangle from-colsums needs --sums");
    const std::vector<Natural> sums = parse_natural_list(opts.sums);
    emit_triangle(opts, run, out, from_column_sums(sums));
  } else {
    throw UsageError("unknown triangle action '" + action +
                     "'; expected emit, reconstruct or from-colsums");
  }
  return kExitOk;
}

int cmd_arrays(const Options& opts, const RunOptions& run, std::ostream& out) {
  const RuleSequence rule = parse_rule_spec(opts.rule, default_horizon());
  const PairArrays arrays = build_arrays(rule, opts.rows, opts.cols);
  switch (output_format(opts, run, Format::kCsv)) {
    case Format::kJson:
      out << arrays_to_json(arrays, opts.rule).dump() << '\n';
      break;
    case Format::kTable:
      write_arrays_text(out, arrays);
      break;
    case Format::kCsv:
      out << "i,j,n\n";
      for (const auto& row : arrays.offset_rows) {
        for (Natural k = 0; k < row.entries.size(); ++k) {
          out << row.value << ',' << row.offset + k << ',' << row.entries[k] << '\n';
        }
      }
      break;
  }
  return kExitOk;
}

int cmd_serial(const std::string& action, const Options& opts, const RunOptions& run,
               std::ostream& out) {
  if (action == "table") {
    const std::vector<Natural> values = two_heap_values(opts.b, opts.max_a);
    const Format format = output_format(opts, run, Format::kCsv);
    if (format == Format::kJson) {
      out << nlohmann::json{{"b", opts.b}, {"values", values}}.dump() << '\n';
    } else {
      out << (format == Format::kCsv ? "a,value\n" : "   a  [a, " + std::to_string(opts.b) + "]\n");
      for (Natural a = 0; a < values.size(); ++a) {
        if (format == Format::kCsv) {
          out << a << ',' << values[a] << '\n';
        } else {
          out << std::setw(4) << a << "  " << values[a] << '\n';
        }
      }
    }
    return kExitOk;
  }
  if (opts.heaps.empty()) throw UsageError("serial " + action + " needs --heaps");
  const std::vector<Natural> heaps = parse_natural_list(opts.heaps);
  if (action == "solve") {
    out << serial_grundy(SerialPosition{heaps}) << '\n';
  } else if (action == "smallest") {
    out << smallest_nim_grundy(heaps) << '\n';
  } else if (action == "move") {
    const SerialPosition position{heaps};
    const auto move = serial_winning_move(position);
    if (!move) {
      out << "no winning move: [" << join(heaps) << "] has value 0\n";
    } else {
      std::vector<Natural> after(heaps);
      if (*move == 0) {
        after.erase(after.begin());
      } else {
        after.front() = *move;
      }
      out << "reduce heap 1 from " << heaps.front() << " to " << *move << ": [" << join(after)
          << "] has value 0\n";
    }
  } else {
    throw UsageError("unknown serial action '" + action +
                     "'; expected solve, move, table or smallest");
  }
  return kExitOk;
}

void write_bench_table(std::ostream& out, const BenchReport& report) {
  out << "rule " << report.rule << ", outputs verified equal\n";
  out << std::right << std::setw(10) << "n" << std::setw(10) << "method" << std::setw(14)
      << "seconds" << std::setw(16) << "terms/s" << std::setw(8) << "runs" << '\n';
  for (const auto& row : report.rows) {
    for (const auto& [name, t] : row.methods) {
      out << std::setw(10) << row.n_terms << std::setw(10) << name << std::setw(14)
          << std::setprecision(6) << t.seconds << std::setw(16) << std::setprecision(4)
          << t.terms_per_second << std::setw(8) << t.runs << '\n';
    }
    if (row.speedup > 0) {
      out << std::setw(10) << row.n_terms << "  naive/fast " << std::setprecision(4)
          << row.speedup << '\n';
    }
  }
}

int cmd_bench(const Options& opts, const RunOptions& run, std::ostream& out) {
  const RuleSequence rule = parse_rule_spec(opts.rule, default_horizon());
  std::vector<Natural> sizes;
  if (!opts.sizes.empty()) {
    sizes = parse_natural_list(opts.sizes);
  } else {
    const Natural n = opts.n == 0 ? 100000 : opts.n;
    for (Natural s : {n / 4, n / 2, n}) {
      if (s != 0 && (sizes.empty() || sizes.back() != s)) sizes.push_back(s);
    }
  }
  if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) {
    throw UsageError("bench sizes must be positive");
  }
  const BenchReport report = run_bench(rule, opts.rule, sizes, split_words(opts.methods));
  const Format format = output_format(opts, run, Format::kCsv);
  if (format == Format::kJson) {
    out << report.to_json().dump(2) << '\n';
  } else if (format == Format::kTable) {
    write_bench_table(out, report);
  } else {
    out << "n,method,seconds,runs,terms_per_second\n";
    for (const auto& row : report.rows) {
      for (const auto& [name, t] : row.methods) {
        out << row.n_terms << ',' << name << ',' << t.seconds << ',' << t.runs << ','
            << t.terms_per_second << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        RunOptions options) {
  CLI::App app{"Grundy sequences of restricted Nim games", "grundylab"};
  app.require_subcommand(1);
  Options opts;

  const auto add_rule = [&](CLI::App* cmd) {
    return cmd->add_option("--rule", opts.rule,
                           "half | sqrt | pow2 | table:<path> | serial:<a1,a2,...>");
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "table | csv | json");
  };

  CLI::App* max = app.add_subcommand("max", "Maximum Nim Grundy values g_0..g_{n-1}");
  add_rule(max);
  max->add_option("--n", opts.n, "number of terms")->required();
  max->add_option("--method", opts.method, "fast | naive | closed");
  add_format(max);

  CLI::App* min = app.add_subcommand("min", "Minimum Nim Grundy values h_0..h_{n-1}");
  add_rule(min);
  min->add_option("--n", opts.n, "number of terms")->required();
  min->add_option("--method", opts.method, "fast | naive");
  add_format(min);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("what", opts.what,
                   "fractal | interspersion | minimax | bijection | triangle-roundtrip | "
                   "serial-oracle")
      ->required();
  CLI::Option* verify_rule = add_rule(verify);
  verify->add_option("--n", opts.n, "window (default 4096)");
  verify->add_option("--input", opts.input, "sequence file to check instead of a rule");
  verify->add_flag("--json", opts.json, "machine-readable report");
  verify->add_option("--max-heaps", opts.max_heaps, "serial-oracle: longest row");
  verify->add_option("--max-size", opts.max_size, "serial-oracle: largest heap");
  verify->add_option("--max-dim", opts.max_dim, "triangle-roundtrip: largest triangle");

  CLI::App* triangle = app.add_subcommand("triangle", "subadditive triangles");
  std::string triangle_action;
  triangle->add_option("action", triangle_action, "emit | reconstruct | from-colsums")
      ->required();
  add_rule(triangle);
  triangle->add_option("--dim", opts.dim, "emit: size of the square display");
  triangle->add_option("--n", opts.n, "terms to read (emit) or write (reconstruct)");
  triangle->add_option("--in", opts.input, "triangle JSON file");
  triangle->add_option("--out", opts.output, "write the triangle here");
  triangle->add_option("--sums", opts.sums, "column sums c_1,c_2,...");
  add_format(triangle);

  CLI::App* arrays = app.add_subcommand("arrays", "positions indexed by (g_n, h_n)");
  add_rule(arrays);
  arrays->add_option("--rows", opts.rows, "values 0..rows-1");
  arrays->add_option("--cols", opts.cols, "h values 0..cols-1");
  add_format(arrays);

  CLI::App* serial = app.add_subcommand("serial", "Serial Nim");
  std::string serial_action;
  serial->add_option("action", serial_action, "solve | move | table | smallest")->required();
  serial->add_option("--heaps", opts.heaps, "heap sizes left to right, e.g. 5,3");
  serial->add_option("--b", opts.b, "table: second heap");
  serial->add_option("--max-a", opts.max_a, "table: largest first heap");
  add_format(serial);

  CLI::App* bench = app.add_subcommand("bench", "time fast against naive evaluation");
  add_rule(bench);
  bench->add_option("--n", opts.n, "largest size; also times n/4 and n/2");
  bench->add_option("--sizes", opts.sizes, "explicit sizes, e.g. 50000,100000");
  bench->add_option("--methods", opts.methods, "comma-separated: fast, naive, closed");
  add_format(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (max->parsed()) return cmd_max(opts, options, out);
    if (min->parsed()) return cmd_min(opts, options, out);
    if (verify->parsed()) return cmd_verify(opts, verify_rule->count() > 0, out);
    if (triangle->parsed()) return cmd_triangle(triangle_action, opts, options, out);
    if (arrays->parsed()) return cmd_arrays(opts, options, out);
    if (serial->parsed()) return cmd_serial(serial_action, opts, options, out);
    if (bench->parsed()) return cmd_bench(opts, options, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (e.witness()) err << " (witness " << *e.witness() << ")";
    err << '\n';
    return e.code() == ErrorCode::kMismatch ? kExitFail : kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace grundylab::cli
