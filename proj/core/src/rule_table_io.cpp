#include "grundylab/rule_table_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace grundylab {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Natural> parse_natural_lines(std::istream& in, std::string_view source) {
  std::vector<Natural> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (!text.empty() && text.front() == '#') continue;
    Natural value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
      const std::string why = ec == std::errc::result_out_of_range
                                  ? "value exceeds 64 bits"
                                  : "expected one nonnegative integer";
      throw Error(ErrorCode::kParse,
                  std::string(source) + ":" + std::to_string(line_no) + ": " + why +
                      ", got '" + std::string(text) + "'",
                  line_no);
    }
    values.push_back(value);
  }
  return values;
}

std::vector<Natural> read_natural_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParse, "cannot open " + path.string());
  }
  return parse_natural_lines(in, path.string());
}

void write_natural_lines(std::ostream& out, std::span<const Natural> values) {
  for (Natural v : values) out << v << '\n';
}

RuleSequence read_rule_table(const std::filesystem::path& path) {
  return RuleSequence::table(read_natural_lines(path));
}

}  // namespace grundylab
