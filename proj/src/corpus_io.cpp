#include "stopkit/corpus_io.hpp"

#include "stopkit/errors.hpp"
#include "stopkit/unicode.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace stopkit {

namespace {

std::string location(std::string_view filename, size_t line) {
  return std::string(filename) + ":" + std::to_string(line);
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

void strip_bom(std::string& text) {
  if (text.rfind("\xef\xbb\xbf", 0) == 0) text.erase(0, 3);
}

void require_utf8(std::string_view text, std::string_view filename, size_t line) {
  if (!uni::valid_utf8(text)) {
    throw FormatError(location(filename, line) + ": invalid UTF-8");
  }
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// CoNLL-U ID column: "3" token, "3-4" multiword range, "3.1" empty node.
enum class ConlluIdKind { token, range, empty_node, bad };

ConlluIdKind classify_conllu_id(std::string_view id) {
  if (all_digits(id)) return ConlluIdKind::token;
  auto dash = id.find('-');
  if (dash != std::string_view::npos &&
      all_digits(id.substr(0, dash)) && all_digits(id.substr(dash + 1))) {
    return ConlluIdKind::range;
  }
  auto dot = id.find('.');
  if (dot != std::string_view::npos &&
      all_digits(id.substr(0, dot)) && all_digits(id.substr(dot + 1))) {
    return ConlluIdKind::empty_node;
  }
  return ConlluIdKind::bad;
}

std::vector<std::string> split_on(std::string_view line, char sep) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t end = line.find(sep, start);
    if (end == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, end - start));
    start = end + 1;
  }
  return fields;
}

} // namespace

std::string trim_whitespace(std::string_view text) {
  std::u32string cps = uni::decode_utf8(text, /*strict=*/false);
  size_t begin = 0;
  size_t end = cps.size();
  while (begin < end && uni::is_space(cps[begin])) ++begin;
  while (end > begin && uni::is_space(cps[end - 1])) --end;
  return uni::encode_utf8(std::u32string_view(cps).substr(begin, end - begin));
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_bytes(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open file for writing: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw FormatError("write failed: " + path);
}

// --- CoNLL-U ---------------------------------------------------------------

PosCorpus read_conllu(std::istream& in, std::string language, std::string_view filename) {
  PosCorpus corpus;
  corpus.language = std::move(language);

  PosSentence sentence;
  auto flush = [&] {
    if (!sentence.empty()) {
      corpus.sentences.push_back(std::move(sentence));
      sentence.clear();
    }
  };

  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (lineno == 1) strip_bom(line);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;
    require_utf8(line, filename, lineno);

    std::vector<std::string> fields = split_on(line, '\t');
    if (fields.size() != 10) {
      throw FormatError(location(filename, lineno) + ": expected 10 tab-separated fields, got " +
                        std::to_string(fields.size()));
    }

    switch (classify_conllu_id(fields[0])) {
      case ConlluIdKind::range:
      case ConlluIdKind::empty_node:
        continue;
      case ConlluIdKind::bad:
        throw FormatError(location(filename, lineno) + ": malformed token ID '" + fields[0] + "'");
      case ConlluIdKind::token:
        break;
    }

    const std::string& form = fields[1];
    if (form.empty()) {
      throw FormatError(location(filename, lineno) + ": empty FORM field");
    }

    UposTag upos = UposTag::X;
    if (fields[3] != "_") {
      auto tag = parse_upos(fields[3]);
      if (!tag) {
        throw FormatError(location(filename, lineno) + ": unknown UPOS tag '" + fields[3] + "'");
      }
      upos = *tag;
    }
    sentence.push_back(PosToken{form, upos});
  }
  flush();
  return corpus;
}

PosCorpus read_conllu_files(const std::vector<std::string>& paths, std::string language) {
  PosCorpus corpus;
  corpus.language = std::move(language);
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open file: " + path);
    PosCorpus part = read_conllu(in, corpus.language, path);
    for (auto& s : part.sentences) corpus.sentences.push_back(std::move(s));
  }
  return corpus;
}

// --- Categorized corpora -----------------------------------------------------

CorpusFormat corpus_format_from_path(std::string_view path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string_view::npos ? "" : std::string(path.substr(dot + 1));
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == "csv") return CorpusFormat::csv;
  if (ext == "jsonl" || ext == "ndjson" || ext == "json") return CorpusFormat::jsonl;
  return CorpusFormat::tsv;
}

CorpusFormat parse_corpus_format(std::string_view name) {
  if (name == "tsv") return CorpusFormat::tsv;
  if (name == "csv") return CorpusFormat::csv;
  if (name == "jsonl" || name == "ndjson") return CorpusFormat::jsonl;
  throw std::invalid_argument("unknown corpus format: " + std::string(name));
}

std::string_view to_string(CorpusFormat format) {
  switch (format) {
    case CorpusFormat::tsv: return "tsv";
    case CorpusFormat::csv: return "csv";
    case CorpusFormat::jsonl: return "jsonl";
  }
  return "tsv";
}

namespace {

// RFC-4180 CSV: quoted fields may contain separators, escaped quotes and
// newlines. Returns one vector of fields per record.
std::vector<std::vector<std::string>> parse_csv(std::string_view bytes, std::string_view filename) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  size_t line = 1;

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    // Skip records that are a single empty field (blank line).
    if (!(fields.size() == 1 && fields[0].empty())) {
      records.push_back(std::move(fields));
    }
    fields.clear();
  };

  for (size_t i = 0; i < bytes.size(); ++i) {
    char c = bytes[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < bytes.size() && bytes[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field_started && field.empty()) {
          in_quotes = true;
          field_started = true;
        } else {
          field += '"'; // stray quote inside unquoted field, keep it
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field += c;
        field_started = true;
        break;
    }
  }
  if (in_quotes) {
    throw FormatError(location(filename, line) + ": unterminated quoted CSV field");
  }
  if (field_started || !field.empty() || !fields.empty()) {
    end_record();
  }
  return records;
}

std::vector<std::vector<std::string>> parse_tsv(std::string_view bytes, std::string_view filename) {
  std::vector<std::vector<std::string>> records;
  std::istringstream in{std::string(bytes)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (line.empty()) continue;
    require_utf8(line, filename, lineno);
    records.push_back(split_on(line, '\t'));
  }
  return records;
}

size_t column_index(const std::vector<std::string>& header, const std::string& name,
                    std::string_view filename) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw FormatError(std::string(filename) + ": missing field '" + name + "' in header");
}

CategorizedCorpus from_records(std::vector<std::vector<std::string>> records,
                               const FieldSchema& schema, std::string language,
                               std::string_view filename) {
  CategorizedCorpus corpus;
  corpus.language = std::move(language);
  if (records.empty()) return corpus; // no header, no docs

  const std::vector<std::string> header = std::move(records.front());
  const size_t category_col = column_index(header, schema.category_field, filename);
  std::vector<size_t> text_cols;
  for (const auto& f : schema.text_fields) text_cols.push_back(column_index(header, f, filename));
  std::optional<size_t> id_col;
  if (schema.id_field) id_col = column_index(header, *schema.id_field, filename);

  std::unordered_set<std::string> seen_ids;
  for (size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    auto cell = [&](size_t col, const std::string& name) -> const std::string& {
      if (col >= rec.size()) {
        throw FormatError(std::string(filename) + ": missing field '" + name + "' in record " +
                          std::to_string(r));
      }
      return rec[col];
    };

    std::string category = trim_whitespace(cell(category_col, schema.category_field));
    if (category.empty()) continue; // rejected

    std::string text;
    for (size_t i = 0; i < text_cols.size(); ++i) {
      const std::string& part = cell(text_cols[i], schema.text_fields[i]);
      if (part.empty()) continue;
      if (!text.empty()) text += ' ';
      text += part;
    }

    std::string id = id_col ? cell(*id_col, *schema.id_field) : std::to_string(r);
    if (!seen_ids.insert(id).second) {
      throw FormatError(std::string(filename) + ": duplicate document id '" + id + "' in record " +
                        std::to_string(r));
    }
    corpus.docs.push_back(Document{std::move(id), std::move(category), std::move(text)});
  }
  return corpus;
}

CategorizedCorpus from_jsonl(std::string_view bytes, const FieldSchema& schema,
                             std::string language, std::string_view filename) {
  CategorizedCorpus corpus;
  corpus.language = std::move(language);

  std::unordered_set<std::string> seen_ids;
  std::istringstream in{std::string(bytes)};
  std::string line;
  size_t lineno = 0;
  size_t record = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (trim_whitespace(line).empty()) continue;
    ++record;
    require_utf8(line, filename, lineno);

    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
      throw FormatError(location(filename, lineno) + ": not a JSON object");
    }
    auto field = [&](const std::string& name) -> std::string {
      auto it = obj.find(name);
      if (it == obj.end() || it->is_null()) {
        throw FormatError(std::string(filename) + ": missing field '" + name + "' in record " +
                          std::to_string(record));
      }
      if (it->is_string()) return it->get<std::string>();
      return it->dump();
    };

    std::string category = trim_whitespace(field(schema.category_field));
    if (category.empty()) continue;

    std::string text;
    for (const auto& name : schema.text_fields) {
      std::string part = field(name);
      if (part.empty()) continue;
      if (!text.empty()) text += ' ';
      text += part;
    }

    std::string id = schema.id_field ? field(*schema.id_field) : std::to_string(record);
    if (!seen_ids.insert(id).second) {
      throw FormatError(std::string(filename) + ": duplicate document id '" + id + "' in record " +
                        std::to_string(record));
    }
    corpus.docs.push_back(Document{std::move(id), std::move(category), std::move(text)});
  }
  return corpus;
}

} // namespace

CategorizedCorpus read_categorized_corpus(std::istream& in, CorpusFormat format,
                                          const FieldSchema& schema, std::string language,
                                          std::string_view filename) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  strip_bom(bytes);
  switch (format) {
    case CorpusFormat::tsv:
      return from_records(parse_tsv(bytes, filename), schema, std::move(language), filename);
    case CorpusFormat::csv:
      return from_records(parse_csv(bytes, filename), schema, std::move(language), filename);
    case CorpusFormat::jsonl:
      return from_jsonl(bytes, schema, std::move(language), filename);
  }
  throw std::logic_error("unreachable corpus format");
}

CategorizedCorpus read_categorized_corpus_file(const std::string& path, const FieldSchema& schema,
                                               std::string language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + path);
  return read_categorized_corpus(in, corpus_format_from_path(path), schema, std::move(language),
                                 path);
}

std::vector<std::string> CategorizedCorpus::categories() const {
  std::vector<std::string> cats;
  for (const auto& doc : docs) {
    if (std::find(cats.begin(), cats.end(), doc.category) == cats.end()) {
      cats.push_back(doc.category);
    }
  }
  std::sort(cats.begin(), cats.end());
  return cats;
}

bool StopwordList::contains(const std::string& word) const {
  if (normalized) {
    return std::binary_search(entries.begin(), entries.end(), word);
  }
  return std::find(entries.begin(), entries.end(), word) != entries.end();
}

// --- Stopword list files ------------------------------------------------------

StopwordList read_stopword_list(std::istream& in, std::string language, std::string source,
                                std::string_view filename) {
  StopwordList list;
  list.language = std::move(language);
  list.source = std::move(source);
  list.normalized = false;

  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (lineno == 1) strip_bom(line);
    require_utf8(line, filename, lineno);
    std::string entry = trim_whitespace(line);
    if (entry.empty() || entry.front() == '#') continue;
    list.entries.push_back(std::move(entry));
  }
  return list;
}

namespace {

// "# key: value" header comments carry list metadata without leaving the
// plain-text format.
std::unordered_map<std::string, std::string> list_file_metadata(std::string_view bytes) {
  std::unordered_map<std::string, std::string> meta;
  std::istringstream in{std::string(bytes)};
  std::string line;
  while (std::getline(in, line)) {
    strip_cr(line);
    std::string trimmed = trim_whitespace(line);
    if (trimmed.empty()) continue;
    if (trimmed.front() != '#') break; // metadata lives before the first entry
    std::string body = trim_whitespace(trimmed.substr(1));
    auto colon = body.find(':');
    if (colon == std::string::npos) continue;
    std::string key = trim_whitespace(body.substr(0, colon));
    std::string value = trim_whitespace(body.substr(colon + 1));
    if (!key.empty() && !meta.count(key)) meta[key] = value;
  }
  return meta;
}

bool sorted_and_unique(const std::vector<std::string>& entries) {
  for (size_t i = 1; i < entries.size(); ++i) {
    if (!(entries[i - 1] < entries[i])) return false;
  }
  return true;
}

} // namespace

StopwordList read_stopword_list_file(const std::string& path, std::optional<std::string> language,
                                     std::optional<std::string> source) {
  const std::string bytes = read_file_bytes(path);
  auto meta = list_file_metadata(bytes);

  std::string lang = language.value_or(meta.count("language") ? meta["language"] : "");
  std::string src = source.value_or(meta.count("source") ? meta["source"] : path);

  std::istringstream in(bytes);
  StopwordList list = read_stopword_list(in, std::move(lang), std::move(src), path);
  if (meta.count("normalized") && meta["normalized"] == "true" && sorted_and_unique(list.entries)) {
    list.normalized = true;
  }
  return list;
}

void write_stopword_list(const StopwordList& list, std::ostream& out) {
  out << "# language: " << list.language << "\n";
  out << "# source: " << list.source << "\n";
  out << "# normalized: " << (list.normalized ? "true" : "false") << "\n";
  for (const auto& entry : list.entries) {
    out << entry << "\n";
  }
}

void write_stopword_list_file(const StopwordList& list, const std::string& path) {
  std::ostringstream out;
  write_stopword_list(list, out);
  write_file_bytes(path, out.str());
}

} // namespace stopkit
