#pragma once

#include "stopkit/coverage.hpp"
#include "stopkit/report_io.hpp"

#include <string>
#include <vector>

namespace stopkit {

enum class TableFormat { md, csv, json };

TableFormat parse_table_format(std::string_view name);
std::string_view to_string(TableFormat format);

// Per-language corpus coverage: language, category count, unique words.
// Rows are sorted by language code; rendering is byte-deterministic.
std::string render_table2(std::vector<VocabSummary> summaries, TableFormat format);

// Per-language list sizes by source; absent sources render as "N/A".
std::string render_table3(std::vector<ListSizes> rows, TableFormat format);

// Found-stopword distribution over category counts. Histogram columns run
// N = 1..K_max over all rows; a cell with N beyond a row's own K renders
// "N/A", an empty bucket renders 0.
std::string render_table4(std::vector<CoverageReport> reports, TableFormat format);

} // namespace stopkit
