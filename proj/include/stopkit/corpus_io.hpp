#pragma once

#include "stopkit/corpus.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stopkit {

// --- CoNLL-U -------------------------------------------------------------

// Parses CoNLL-U text: 10 tab-separated columns per token line, '#'
// comments, blank lines between sentences. Emits (FORM, UPOS) pairs.
// Multiword-token ranges ("3-4") and empty nodes ("3.1") are skipped;
// a "_" UPOS becomes the placeholder tag X. A token line without exactly
// 10 fields is a FormatError naming the line. Empty input parses to an
// empty corpus.
PosCorpus read_conllu(std::istream& in, std::string language,
                      std::string_view filename = "<stream>");

// Reads and concatenates several CoNLL-U files (e.g. train+dev+test splits).
PosCorpus read_conllu_files(const std::vector<std::string>& paths, std::string language);

// --- Categorized news corpora --------------------------------------------

enum class CorpusFormat { tsv, csv, jsonl };

// By file extension: .tsv, .csv, .jsonl/.ndjson; anything else is tsv.
CorpusFormat corpus_format_from_path(std::string_view path);

CorpusFormat parse_corpus_format(std::string_view name);
std::string_view to_string(CorpusFormat format);

// Names the fields that make up a document. Text fields are concatenated
// in order with a single space; the default headline+text pairing matches
// news corpora that separate title from body. Without an id field, the
// 1-based record index is used.
struct FieldSchema {
  std::string category_field = "category";
  std::vector<std::string> text_fields = {"headline", "text"};
  std::optional<std::string> id_field;
};

// One Document per record, input order preserved. Records whose category
// is empty are dropped. A declared field missing from the header or a
// record is a FormatError naming the field and record.
CategorizedCorpus read_categorized_corpus(std::istream& in, CorpusFormat format,
                                          const FieldSchema& schema, std::string language,
                                          std::string_view filename = "<stream>");

CategorizedCorpus read_categorized_corpus_file(const std::string& path,
                                               const FieldSchema& schema,
                                               std::string language);

// --- Stopword list files --------------------------------------------------

// One entry per line; '#' comment lines and blank lines are ignored;
// surrounding whitespace is trimmed. Entries stay verbatim and may repeat:
// normalization is a separate, explicit step (lists::normalize_list).
StopwordList read_stopword_list(std::istream& in, std::string language, std::string source,
                                std::string_view filename = "<stream>");

// Reads a list file, letting "# language:", "# source:" and "# normalized:"
// header comments written by write_stopword_list supply metadata that the
// caller did not. The normalized flag is honored only if the entries really
// are sorted and duplicate-free.
StopwordList read_stopword_list_file(const std::string& path,
                                     std::optional<std::string> language = std::nullopt,
                                     std::optional<std::string> source = std::nullopt);

// LF line endings, metadata header comments, one entry per line.
void write_stopword_list(const StopwordList& list, std::ostream& out);
void write_stopword_list_file(const StopwordList& list, const std::string& path);

// --- Shared helpers -------------------------------------------------------

std::string trim_whitespace(std::string_view text);
std::string read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, std::string_view bytes);

} // namespace stopkit
