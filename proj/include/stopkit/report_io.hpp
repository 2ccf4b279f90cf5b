#pragma once

#include "stopkit/coverage.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace stopkit {

// Table-2-style summary of a category vocabulary.
struct VocabSummary {
  std::string language;
  std::uint64_t category_count = 0;
  std::uint64_t union_size = 0;
  std::vector<std::pair<std::string, std::uint64_t>> category_sizes; // sorted by name
  std::vector<std::string> dropped_categories;

  bool operator==(const VocabSummary&) const = default;
};

VocabSummary summarize_vocabulary(const CategoryVocabulary& vocab);

// Table-3-style per-language list sizes; absent sources stay unset.
struct ListSizes {
  std::string language;
  std::optional<std::uint64_t> pos_size;
  std::optional<std::uint64_t> curated_size;
  std::uint64_t merged_size = 0;

  bool operator==(const ListSizes&) const = default;
};

// Reports are stored as schema-tagged, versioned JSON documents with a
// fixed key order, so identical objects serialize to identical bytes.
// read(write(x)) == x; an unknown schema or version is a FormatError.

void write_report(const CoverageReport& report, std::ostream& out);
void write_report(const Classification& cls, std::ostream& out);
void write_report(const VocabSummary& summary, std::ostream& out);
void write_report(const ListSizes& sizes, std::ostream& out);

std::string report_to_json(const CoverageReport& report);
std::string report_to_json(const Classification& cls);
std::string report_to_json(const VocabSummary& summary);
std::string report_to_json(const ListSizes& sizes);

using ReportDocument = std::variant<CoverageReport, Classification, VocabSummary, ListSizes>;

// Reads any report document, dispatching on its schema tag.
ReportDocument read_report(std::istream& in, std::string_view filename = "<stream>");
ReportDocument read_report_json(std::string_view json, std::string_view filename = "<stream>");

// Typed readers; the wrong document kind is a FormatError.
CoverageReport read_coverage_report(std::istream& in, std::string_view filename = "<stream>");
Classification read_classification(std::istream& in, std::string_view filename = "<stream>");
VocabSummary read_vocab_summary(std::istream& in, std::string_view filename = "<stream>");
ListSizes read_list_sizes(std::istream& in, std::string_view filename = "<stream>");

} // namespace stopkit
