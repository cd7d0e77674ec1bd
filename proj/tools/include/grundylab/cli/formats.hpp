#pragma once

// File and display formats of the command-line tool.
//
//   sequence  JSON {rule, game, method, n_terms, values}; CSV "n,value"; or an
//             aligned table. Sequence input files are JSON arrays, sequence
//             documents, or one integer per line.
//   triangle  JSON {dim, rows: [[s_{i,i+1}, ..., s_{i,dim-1}], ...]}.
//   arrays    JSON {rule, cols, rows: [{value, offset, entries}]}, where
//             entries start at column `offset`.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "grundylab/fractal.hpp"
#include "grundylab/minnim.hpp"
#include "grundylab/rule.hpp"
#include "json.hpp"

namespace grundylab::cli {

enum class Format { kTable, kCsv, kJson };

Format parse_format(std::string_view text);

nlohmann::json sequence_to_json(const GrundyPrefix& prefix, std::string_view rule_text);
void write_sequence(std::ostream& out, const GrundyPrefix& prefix,
                    std::string_view rule_text, Format format);

std::vector<Natural> read_sequence_file(const std::filesystem::path& path);

nlohmann::json triangle_to_json(const SubadditiveTriangle& triangle);
// Throws grundylab::Error(kParse) on a malformed document.
SubadditiveTriangle triangle_from_json(const nlohmann::json& doc);
SubadditiveTriangle read_triangle_file(const std::filesystem::path& path);
// Rows right-aligned under their columns, blanks in the lower left.
void write_triangle_text(std::ostream& out, const SubadditiveTriangle& triangle);

nlohmann::json arrays_to_json(const PairArrays& arrays, std::string_view rule_text);
// A' with blank cells for j < s_{0i}, then A left-justified.
void write_arrays_text(std::ostream& out, const PairArrays& arrays);

}  // namespace grundylab::cli
