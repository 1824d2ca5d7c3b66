#pragma once

// Tabular output for the blockhh CLI in three formats.
//
//   table  aligned columns for humans
//   json   {"command": ..., "params": {...}, "rows": [{...}, ...]}
//   csv    header row, then one line per row
//
// Exact counts (coefficients, dimensions) travel as decimal strings in JSON so
// that no value is ever rounded through a floating-point number. Indices and
// parameters are JSON integers.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace blockhh::cli {

enum class Format { table, json, csv };

std::optional<Format> parse_format(const std::string& name);

/// Arbitrary-precision integer or rational in decimal.
struct Exact {
  std::string digits;
};

using Cell = std::variant<std::monostate, std::int64_t, bool, std::string, Exact>;

struct Document {
  std::string command;
  std::vector<std::pair<std::string, Cell>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws std::invalid_argument if the row width differs from columns.
  void add_row(std::vector<Cell> row);
};

std::string render(const Document& doc, Format format);

}  // namespace blockhh::cli
