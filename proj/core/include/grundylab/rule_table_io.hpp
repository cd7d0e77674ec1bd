#pragma once

// Text format shared by rule tables and plain sequences: UTF-8, one
// nonnegative decimal integer per line, line index n starting at 0.
// Lines starting with '#' are comments and do not consume an index.
// Anything else that is not a single integer (blank lines included) is a
// kParse error naming the line.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "grundylab/rule.hpp"

namespace grundylab {

std::vector<Natural> parse_natural_lines(std::istream& in,
                                         std::string_view source = "<input>");
std::vector<Natural> read_natural_lines(const std::filesystem::path& path);

void write_natural_lines(std::ostream& out, std::span<const Natural> values);

// Reads a table and validates 0 <= f(n) <= n.
RuleSequence read_rule_table(const std::filesystem::path& path);

}  // namespace grundylab
