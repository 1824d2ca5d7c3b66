#include "output.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace blockhh::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return nullptr;
        else if constexpr (std::is_same_v<T, Exact>)
          return v.digits;
        else
          return v;
      },
      cell);
}

std::string to_text(const Cell& cell, const char* null_text) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return null_text;
        else if constexpr (std::is_same_v<T, std::int64_t>)
          return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>)
          return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, Exact>)
          return v.digits;
        else
          return v;
      },
      cell);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_json(const Document& doc) {
  ordered_json out;
  out["command"] = doc.command;
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : doc.params) params[key] = to_json(value);
  out["params"] = params;
  ordered_json rows = ordered_json::array();
  for (const auto& row : doc.rows) {
    ordered_json r = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[doc.columns[i]] = to_json(row[i]);
    rows.push_back(std::move(r));
  }
  out["rows"] = rows;
  return out.dump(2) + "\n";
}

std::string render_csv(const Document& doc) {
  std::ostringstream out;
  for (std::size_t i = 0; i < doc.columns.size(); ++i) out << (i ? "," : "") << csv_field(doc.columns[i]);
  out << "\n";
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(to_text(row[i], ""));
    out << "\n";
  }
  return out.str();
}

std::string render_table(const Document& doc) {
  std::vector<std::vector<std::string>> text;
  text.push_back(doc.columns);
  for (const auto& row : doc.rows) {
    std::vector<std::string> line;
    for (const auto& cell : row) {
      std::string s = to_text(cell, "-");
      line.push_back(s.empty() ? "-" : s);
    }
    text.push_back(std::move(line));
  }
  std::vector<std::size_t> width(doc.columns.size());
  for (const auto& line : text)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  std::ostringstream out;
  for (const auto& line : text) {
    std::string s;
    for (std::size_t i = 0; i < line.size(); ++i) {
      s += line[i];
      if (i + 1 < line.size()) s += std::string(width[i] - line[i].size() + 2, ' ');
    }
    out << s << "\n";
  }
  return out.str();
}

}  // namespace

std::optional<Format> parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

void Document::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("row width does not match the column set");
  rows.push_back(std::move(row));
}

std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::json: return render_json(doc);
    case Format::csv: return render_csv(doc);
    case Format::table: return render_table(doc);
  }
  return {};
}

}  // namespace blockhh::cli
