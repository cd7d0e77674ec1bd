#include "grundylab/cli/formats.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "grundylab/cli/rule_spec.hpp"
#include "grundylab/rule_table_io.hpp"

namespace grundylab::cli {

using nlohmann::json;

Format parse_format(std::string_view text) {
  if (text == "table") return Format::kTable;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw UsageError("unknown format '" + std::string(text) + "'; expected table, csv or json");
}

json sequence_to_json(const GrundyPrefix& prefix, std::string_view rule_text) {
  return {
      {"rule", rule_text},
      {"game", to_string(prefix.game)},
      {"method", to_string(prefix.method)},
      {"n_terms", prefix.size()},
      {"values", prefix.values},
  };
}

void write_sequence(std::ostream& out, const GrundyPrefix& prefix,
                    std::string_view rule_text, Format format) {
  const std::string_view column = prefix.game == Game::kMaximum ? "g" : "h";
  switch (format) {
    case Format::kJson:
      out << sequence_to_json(prefix, rule_text).dump() << '\n';
      return;
    case Format::kCsv:
      out << "n," << column << '\n';
      for (std::size_t n = 0; n < prefix.size(); ++n) out << n << ',' << prefix[n] << '\n';
      return;
    case Format::kTable: {
      const std::size_t width = std::max<std::size_t>(
          4, std::to_string(prefix.size() == 0 ? 0 : prefix.size() - 1).size() + 1);
      out << std::setw(width) << "n" << std::setw(width + 2) << column << '\n';
      for (std::size_t n = 0; n < prefix.size(); ++n) {
        out << std::setw(width) << n << std::setw(width + 2) << prefix[n] << '\n';
      }
      return;
    }
  }
}

std::vector<Natural> read_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    try {
      const json doc = json::parse(text);
      if (doc.is_object()) return doc.at("values").get<std::vector<Natural>>();
      return doc.get<std::vector<Natural>>();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
    }
  }
  std::istringstream lines(text);
  return parse_natural_lines(lines, path.string());
}

json triangle_to_json(const SubadditiveTriangle& triangle) {
  return {{"dim", triangle.dim()}, {"rows", triangle.rows()}};
}

SubadditiveTriangle triangle_from_json(const json& doc) {
  try {
    const Natural dim = doc.at("dim").get<Natural>();
    auto rows = doc.at("rows").get<std::vector<std::vector<Natural>>>();
    if (dim == 0 || rows.size() + 1 != dim) {
      throw Error(ErrorCode::kParse, "dim " + std::to_string(dim) + " does not match " +
                                         std::to_string(rows.size()) + " rows");
    }
    return SubadditiveTriangle(std::move(rows));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("triangle document: ") + e.what());
  }
}

SubadditiveTriangle read_triangle_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path.string());
  try {
    return triangle_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

void write_triangle_text(std::ostream& out, const SubadditiveTriangle& triangle) {
  std::size_t width = 1;
  for (const auto& row : triangle.rows()) {
    for (Natural s : row) width = std::max(width, std::to_string(s).size());
  }
  width += 1;
  const std::size_t n_rows = triangle.rows().size();
  for (std::size_t i = 0; i < n_rows; ++i) {
    out << std::string(i * width, ' ');
    for (Natural s : triangle.rows()[i]) out << std::setw(width) << s;
    out << '\n';
  }
}

json arrays_to_json(const PairArrays& arrays, std::string_view rule_text) {
  json rows = json::array();
  for (const auto& row : arrays.offset_rows) {
    rows.push_back({{"value", row.value}, {"offset", row.offset}, {"entries", row.entries}});
  }
  return {{"rule", rule_text}, {"cols", arrays.cols}, {"rows", rows}};
}

void write_arrays_text(std::ostream& out, const PairArrays& arrays) {
  std::size_t width = 1;
  for (const auto& row : arrays.offset_rows) {
    for (Natural n : row.entries) width = std::max(width, std::to_string(n).size());
  }
  width += 1;
  out << "A' (row i, column j holds n with g_n = i, h_n = j)\n";
  for (const auto& row : arrays.offset_rows) {
    const std::size_t blanks = std::min<Natural>(row.offset, arrays.cols);
    out << std::string(blanks * width, ' ');
    for (Natural n : row.entries) out << std::setw(width) << n;
    out << '\n';
  }
  out << "A (rows left-justified)\n";
  for (const auto& row : arrays.offset_rows) {
    for (Natural n : row.entries) out << std::setw(width) << n;
    out << '\n';
  }
}

}  // namespace grundylab::cli
