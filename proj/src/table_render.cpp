#include "stopkit/table_render.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stopkit {

using ordered_json = nlohmann::ordered_json;

TableFormat parse_table_format(std::string_view name) {
  if (name == "md" || name == "markdown") return TableFormat::md;
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  throw std::invalid_argument("unknown table format: " + std::string(name));
}

std::string_view to_string(TableFormat format) {
  switch (format) {
    case TableFormat::md: return "md";
    case TableFormat::csv: return "csv";
    case TableFormat::json: return "json";
  }
  return "md";
}

namespace {

std::string csv_cell(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string render_rows(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::csv: {
      for (size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << csv_cell(header[i]);
      }
      out << "\n";
      for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
          out << (i ? "," : "") << csv_cell(row[i]);
        }
        out << "\n";
      }
      break;
    }
    case TableFormat::md: {
      out << "|";
      for (const auto& h : header) out << " " << h << " |";
      out << "\n|";
      for (size_t i = 0; i < header.size(); ++i) out << " --- |";
      out << "\n";
      for (const auto& row : rows) {
        out << "|";
        for (const auto& cell : row) out << " " << cell << " |";
        out << "\n";
      }
      break;
    }
    case TableFormat::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json obj;
        for (size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      out << arr.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::string na_or(const std::optional<std::uint64_t>& value) {
  return value ? std::to_string(*value) : "N/A";
}

} // namespace

std::string render_table2(std::vector<VocabSummary> summaries, TableFormat format) {
  std::sort(summaries.begin(), summaries.end(),
            [](const auto& a, const auto& b) { return a.language < b.language; });
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : summaries) {
    rows.push_back({s.language, std::to_string(s.category_count), std::to_string(s.union_size)});
  }
  return render_rows({"language", "categories", "unique_words"}, rows, format);
}

std::string render_table3(std::vector<ListSizes> sizes, TableFormat format) {
  std::sort(sizes.begin(), sizes.end(),
            [](const auto& a, const auto& b) { return a.language < b.language; });
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : sizes) {
    rows.push_back(
        {s.language, na_or(s.pos_size), na_or(s.curated_size), std::to_string(s.merged_size)});
  }
  return render_rows({"language", "pos", "curated", "merged"}, rows, format);
}

std::string render_table4(std::vector<CoverageReport> reports, TableFormat format) {
  std::sort(reports.begin(), reports.end(),
            [](const auto& a, const auto& b) { return a.language < b.language; });
  std::uint64_t k_max = 0;
  for (const auto& r : reports) k_max = std::max(k_max, r.category_count);

  std::vector<std::string> header = {"language", "found", "detection_pct"};
  for (std::uint64_t n = 1; n <= k_max; ++n) header.push_back(std::to_string(n));

  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    std::vector<std::string> row = {r.language, std::to_string(r.found.size()),
                                    detection_rate(r).percent()};
    for (std::uint64_t n = 1; n <= k_max; ++n) {
      row.push_back(n <= r.category_count ? std::to_string(r.histogram[n - 1]) : "N/A");
    }
    rows.push_back(std::move(row));
  }
  return render_rows(header, rows, format);
}

} // namespace stopkit
