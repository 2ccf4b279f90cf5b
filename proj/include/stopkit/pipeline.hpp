#pragma once

#include "stopkit/corpus_io.hpp"
#include "stopkit/coverage.hpp"
#include "stopkit/report_io.hpp"
#include "stopkit/textnorm.hpp"
#include "stopkit/upos.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace stopkit {

// Plain-text key=value run configuration. Relative paths are resolved
// against the manifest file's directory.
//
//   language=hau
//   conllu_paths=pos/train.conllu,pos/dev.conllu   (optional)
//   curated_list_paths=lists/asp.txt               (optional)
//   corpus_path=news/dev.tsv
//   punct_mode=split
//   text_fields=headline,text
//
// Optional extras: category_field, id_field, corpus_format, tags,
// lowercase. At least one stopword source must be configured.
struct Manifest {
  std::string language;
  std::vector<std::string> conllu_paths;
  std::vector<std::string> curated_list_paths;
  std::string corpus_path;
  NormPolicy policy;
  FieldSchema schema;
  std::optional<CorpusFormat> corpus_format; // default: by file extension
  TagSet tags = TagSet::function_words();
};

Manifest read_manifest(std::istream& in, std::string_view filename = "<stream>");
Manifest read_manifest_file(const std::string& path);

struct PipelineResult {
  StopwordList merged;
  CoverageReport report;
  Classification classification;
  VocabSummary vocab_summary;
  ListSizes sizes;
};

// The full flow for one language: harvest POS stopwords from the CoNLL-U
// files, normalize and merge the curated lists into them, build the
// category vocabulary from the news corpus, and measure the merged list's
// coverage. Identical inputs give identical results for any thread count.
PipelineResult run_pipeline(const Manifest& manifest, unsigned threads = 1);

// Writes merged_list.txt, coverage_report.json, classification.json,
// vocab_summary.json and list_sizes.json into out_dir (created if needed).
void write_pipeline_outputs(const PipelineResult& result, const std::string& out_dir);

} // namespace stopkit
