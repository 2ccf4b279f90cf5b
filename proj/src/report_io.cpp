#include "stopkit/report_io.hpp"

#include "stopkit/errors.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <ostream>
#include <sstream>

namespace stopkit {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kCoverageSchema = "stopkit/coverage-report";
constexpr const char* kClassificationSchema = "stopkit/classification";
constexpr const char* kVocabSummarySchema = "stopkit/vocab-summary";
constexpr const char* kListSizesSchema = "stopkit/list-sizes";

ordered_json ratio_json(const Ratio& r) {
  // pct is derived, kept for readability; num/den are authoritative
  return ordered_json{{"num", r.num}, {"den", r.den}, {"pct", r.percent()}};
}

ordered_json optional_ratio_json(const std::optional<Ratio>& r) {
  if (!r) return nullptr;
  return ratio_json(*r);
}

ordered_json header(const char* schema) {
  ordered_json j;
  j["schema"] = schema;
  j["schema_version"] = kSchemaVersion;
  return j;
}

ordered_json to_json(const CoverageReport& report) {
  ordered_json j = header(kCoverageSchema);
  j["language"] = report.language;
  j["list_size"] = report.list_size;
  j["categories"] = report.category_count;
  j["histogram"] = report.histogram;
  ordered_json found = ordered_json::array();
  for (const auto& rec : report.found) {
    found.push_back(ordered_json{{"word", rec.word}, {"categories", rec.categories}});
  }
  j["found"] = std::move(found);
  j["missing"] = report.missing;
  if (report.generated_at) j["generated_at"] = *report.generated_at;
  return j;
}

ordered_json to_json(const Classification& cls) {
  ordered_json j = header(kClassificationSchema);
  j["language"] = cls.language;
  j["categories"] = cls.category_count;
  j["list_size"] = cls.list_size;
  j["found"] = cls.found_count();
  j["detection_rate"] = ratio_json(cls.detection_rate);
  j["agnostic_rate"] = optional_ratio_json(cls.agnostic_rate);
  j["specific_rate"] = optional_ratio_json(cls.specific_rate);
  j["agnostic"] = cls.agnostic;
  j["intermediate"] = cls.intermediate;
  j["specific"] = cls.specific;
  j["missing"] = cls.missing;
  return j;
}

ordered_json to_json(const VocabSummary& summary) {
  ordered_json j = header(kVocabSummarySchema);
  j["language"] = summary.language;
  j["categories"] = summary.category_count;
  j["union_size"] = summary.union_size;
  ordered_json sizes = ordered_json::array();
  for (const auto& [cat, n] : summary.category_sizes) {
    sizes.push_back(ordered_json{{"category", cat}, {"size", n}});
  }
  j["category_sizes"] = std::move(sizes);
  j["dropped_categories"] = summary.dropped_categories;
  return j;
}

ordered_json to_json(const ListSizes& sizes) {
  ordered_json j = header(kListSizesSchema);
  j["language"] = sizes.language;
  j["pos_size"] = sizes.pos_size ? ordered_json(*sizes.pos_size) : ordered_json(nullptr);
  j["curated_size"] = sizes.curated_size ? ordered_json(*sizes.curated_size) : ordered_json(nullptr);
  j["merged_size"] = sizes.merged_size;
  return j;
}

// --- reading ---------------------------------------------------------------

[[noreturn]] void fail(std::string_view filename, const std::string& what) {
  throw FormatError(std::string(filename) + ": " + what);
}

const ordered_json& need(const ordered_json& j, const char* key, std::string_view filename) {
  auto it = j.find(key);
  if (it == j.end()) fail(filename, std::string("missing key '") + key + "'");
  return *it;
}

std::uint64_t need_u64(const ordered_json& j, const char* key, std::string_view filename) {
  const auto& v = need(j, key, filename);
  if (!v.is_number_unsigned()) fail(filename, std::string("key '") + key + "' is not a count");
  return v.get<std::uint64_t>();
}

std::string need_string(const ordered_json& j, const char* key, std::string_view filename) {
  const auto& v = need(j, key, filename);
  if (!v.is_string()) fail(filename, std::string("key '") + key + "' is not a string");
  return v.get<std::string>();
}

std::vector<std::string> need_string_array(const ordered_json& j, const char* key,
                                           std::string_view filename) {
  const auto& v = need(j, key, filename);
  if (!v.is_array()) fail(filename, std::string("key '") + key + "' is not an array");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) fail(filename, std::string("key '") + key + "' has a non-string item");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Ratio parse_ratio(const ordered_json& j, std::string_view filename) {
  Ratio r;
  r.num = need_u64(j, "num", filename);
  r.den = need_u64(j, "den", filename);
  if (r.den == 0) fail(filename, "ratio with zero denominator");
  return r;
}

CoverageReport coverage_from_json(const ordered_json& j, std::string_view filename) {
  CoverageReport report;
  report.language = need_string(j, "language", filename);
  report.list_size = need_u64(j, "list_size", filename);
  report.category_count = need_u64(j, "categories", filename);

  const auto& hist = need(j, "histogram", filename);
  if (!hist.is_array()) fail(filename, "'histogram' is not an array");
  for (const auto& cell : hist) {
    if (!cell.is_number_unsigned()) fail(filename, "'histogram' has a non-count cell");
    report.histogram.push_back(cell.get<std::uint64_t>());
  }
  if (report.histogram.size() != report.category_count) {
    fail(filename, "histogram length does not match category count");
  }

  const auto& found = need(j, "found", filename);
  if (!found.is_array()) fail(filename, "'found' is not an array");
  for (const auto& rec : found) {
    FoundRecord fr;
    fr.word = need_string(rec, "word", filename);
    auto cats = need_string_array(rec, "categories", filename);
    fr.categories.insert(cats.begin(), cats.end());
    if (fr.categories.empty() || fr.categories.size() > report.category_count) {
      fail(filename, "found word '" + fr.word + "' has an out-of-range category set");
    }
    report.found.push_back(std::move(fr));
  }
  report.missing = need_string_array(j, "missing", filename);
  if (report.found.size() + report.missing.size() != report.list_size) {
    fail(filename, "found + missing does not equal list_size");
  }
  if (auto it = j.find("generated_at"); it != j.end() && it->is_string()) {
    report.generated_at = it->get<std::string>();
  }
  return report;
}

Classification classification_from_json(const ordered_json& j, std::string_view filename) {
  Classification cls;
  cls.language = need_string(j, "language", filename);
  cls.category_count = need_u64(j, "categories", filename);
  cls.list_size = need_u64(j, "list_size", filename);
  cls.agnostic = need_string_array(j, "agnostic", filename);
  cls.intermediate = need_string_array(j, "intermediate", filename);
  cls.specific = need_string_array(j, "specific", filename);
  cls.missing = need_string_array(j, "missing", filename);
  cls.detection_rate = parse_ratio(need(j, "detection_rate", filename), filename);
  if (const auto& r = need(j, "agnostic_rate", filename); !r.is_null()) {
    cls.agnostic_rate = parse_ratio(r, filename);
  }
  if (const auto& r = need(j, "specific_rate", filename); !r.is_null()) {
    cls.specific_rate = parse_ratio(r, filename);
  }
  return cls;
}

VocabSummary vocab_summary_from_json(const ordered_json& j, std::string_view filename) {
  VocabSummary summary;
  summary.language = need_string(j, "language", filename);
  summary.category_count = need_u64(j, "categories", filename);
  summary.union_size = need_u64(j, "union_size", filename);
  const auto& sizes = need(j, "category_sizes", filename);
  if (!sizes.is_array()) fail(filename, "'category_sizes' is not an array");
  for (const auto& item : sizes) {
    summary.category_sizes.emplace_back(need_string(item, "category", filename),
                                        need_u64(item, "size", filename));
  }
  summary.dropped_categories = need_string_array(j, "dropped_categories", filename);
  return summary;
}

ListSizes list_sizes_from_json(const ordered_json& j, std::string_view filename) {
  ListSizes sizes;
  sizes.language = need_string(j, "language", filename);
  if (const auto& v = need(j, "pos_size", filename); !v.is_null()) {
    sizes.pos_size = v.get<std::uint64_t>();
  }
  if (const auto& v = need(j, "curated_size", filename); !v.is_null()) {
    sizes.curated_size = v.get<std::uint64_t>();
  }
  sizes.merged_size = need_u64(j, "merged_size", filename);
  return sizes;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace

VocabSummary summarize_vocabulary(const CategoryVocabulary& vocab) {
  VocabSummary summary;
  summary.language = vocab.language;
  summary.category_count = vocab.category_count();
  summary.union_size = vocab.union_size();
  for (const auto& [cat, words] : vocab.vocab) {
    summary.category_sizes.emplace_back(cat, words.size());
  }
  summary.dropped_categories = vocab.dropped_categories;
  return summary;
}

std::string report_to_json(const CoverageReport& report) { return dump(to_json(report)); }
std::string report_to_json(const Classification& cls) { return dump(to_json(cls)); }
std::string report_to_json(const VocabSummary& summary) { return dump(to_json(summary)); }
std::string report_to_json(const ListSizes& sizes) { return dump(to_json(sizes)); }

void write_report(const CoverageReport& report, std::ostream& out) {
  out << report_to_json(report);
}
void write_report(const Classification& cls, std::ostream& out) { out << report_to_json(cls); }
void write_report(const VocabSummary& summary, std::ostream& out) {
  out << report_to_json(summary);
}
void write_report(const ListSizes& sizes, std::ostream& out) { out << report_to_json(sizes); }

ReportDocument read_report_json(std::string_view json, std::string_view filename) {
  ordered_json j = ordered_json::parse(json, nullptr, false);
  if (j.is_discarded() || !j.is_object()) fail(filename, "not a JSON report document");

  const std::string schema = need_string(j, "schema", filename);
  const std::uint64_t version = need_u64(j, "schema_version", filename);
  if (version != kSchemaVersion) {
    fail(filename, "unknown schema version " + std::to_string(version) + " for " + schema);
  }

  if (schema == kCoverageSchema) return coverage_from_json(j, filename);
  if (schema == kClassificationSchema) return classification_from_json(j, filename);
  if (schema == kVocabSummarySchema) return vocab_summary_from_json(j, filename);
  if (schema == kListSizesSchema) return list_sizes_from_json(j, filename);
  fail(filename, "unknown report schema '" + schema + "'");
}

ReportDocument read_report(std::istream& in, std::string_view filename) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_report_json(buf.str(), filename);
}

namespace {

template <typename T>
T read_typed(std::istream& in, std::string_view filename, const char* kind) {
  ReportDocument doc = read_report(in, filename);
  if (auto* typed = std::get_if<T>(&doc)) return std::move(*typed);
  fail(filename, std::string("expected a ") + kind + " document");
}

} // namespace

CoverageReport read_coverage_report(std::istream& in, std::string_view filename) {
  return read_typed<CoverageReport>(in, filename, kCoverageSchema);
}
Classification read_classification(std::istream& in, std::string_view filename) {
  return read_typed<Classification>(in, filename, kClassificationSchema);
}
VocabSummary read_vocab_summary(std::istream& in, std::string_view filename) {
  return read_typed<VocabSummary>(in, filename, kVocabSummarySchema);
}
ListSizes read_list_sizes(std::istream& in, std::string_view filename) {
  return read_typed<ListSizes>(in, filename, kListSizesSchema);
}

} // namespace stopkit
