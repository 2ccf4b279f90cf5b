#include "stopkit/pipeline.hpp"

#include "stopkit/errors.hpp"
#include "stopkit/lists.hpp"
#include "stopkit/pos_extract.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>

namespace stopkit {

namespace {

namespace fs = std::filesystem;

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::string trimmed = trim_whitespace(item);
    if (!trimmed.empty()) out.push_back(std::move(trimmed));
  }
  return out;
}

bool parse_bool(const std::string& value, std::string_view filename, size_t line) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw FormatError(std::string(filename) + ":" + std::to_string(line) +
                    ": expected true or false, got '" + value + "'");
}

} // namespace

Manifest read_manifest(std::istream& in, std::string_view filename) {
  Manifest manifest;

  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = trim_whitespace(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;

    auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw FormatError(std::string(filename) + ":" + std::to_string(lineno) +
                        ": expected key=value");
    }
    std::string key = trim_whitespace(trimmed.substr(0, eq));
    std::string value = trim_whitespace(trimmed.substr(eq + 1));

    if (key == "language") {
      manifest.language = value;
    } else if (key == "conllu_paths") {
      manifest.conllu_paths = split_list(value);
    } else if (key == "curated_list_paths") {
      manifest.curated_list_paths = split_list(value);
    } else if (key == "corpus_path") {
      manifest.corpus_path = value;
    } else if (key == "punct_mode") {
      try {
        manifest.policy.punct = parse_punct_mode(value);
      } catch (const std::invalid_argument& e) {
        throw FormatError(std::string(filename) + ":" + std::to_string(lineno) + ": " + e.what());
      }
    } else if (key == "lowercase") {
      manifest.policy.lowercase = parse_bool(value, filename, lineno);
    } else if (key == "text_fields") {
      manifest.schema.text_fields = split_list(value);
    } else if (key == "category_field") {
      manifest.schema.category_field = value;
    } else if (key == "id_field") {
      if (!value.empty()) manifest.schema.id_field = value;
    } else if (key == "corpus_format") {
      try {
        manifest.corpus_format = parse_corpus_format(value);
      } catch (const std::invalid_argument& e) {
        throw FormatError(std::string(filename) + ":" + std::to_string(lineno) + ": " + e.what());
      }
    } else if (key == "tags") {
      try {
        manifest.tags = TagSet::parse(value);
      } catch (const std::invalid_argument& e) {
        throw FormatError(std::string(filename) + ":" + std::to_string(lineno) + ": " + e.what());
      }
    } else {
      throw FormatError(std::string(filename) + ":" + std::to_string(lineno) +
                        ": unknown manifest key '" + key + "'");
    }
  }
  if (manifest.language.empty()) {
    throw FormatError(std::string(filename) + ": manifest missing 'language'");
  }
  if (manifest.corpus_path.empty()) {
    throw FormatError(std::string(filename) + ": manifest missing 'corpus_path'");
  }
  if (manifest.conllu_paths.empty() && manifest.curated_list_paths.empty()) {
    throw SemanticError(std::string(filename) + ": manifest configures no stopword sources");
  }
  return manifest;
}

Manifest read_manifest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + path);
  Manifest manifest = read_manifest(in, path);

  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&](std::string& p) {
    if (!p.empty() && fs::path(p).is_relative()) p = (base / p).string();
  };
  for (auto& p : manifest.conllu_paths) resolve(p);
  for (auto& p : manifest.curated_list_paths) resolve(p);
  resolve(manifest.corpus_path);
  return manifest;
}

PipelineResult run_pipeline(const Manifest& manifest, unsigned threads) {
  std::vector<StopwordList> sources;
  std::optional<std::uint64_t> pos_size;
  std::optional<std::uint64_t> curated_size;

  if (!manifest.conllu_paths.empty()) {
    PosCorpus pos_corpus = read_conllu_files(manifest.conllu_paths, manifest.language);
    StopwordList pos_list = extract_pos_stopwords(pos_corpus, manifest.tags, manifest.policy);
    pos_size = pos_list.size();
    sources.push_back(std::move(pos_list));
  }

  if (!manifest.curated_list_paths.empty()) {
    std::vector<StopwordList> curated;
    for (const auto& path : manifest.curated_list_paths) {
      StopwordList raw = read_stopword_list_file(path, std::nullopt, std::nullopt);
      if (raw.language.empty()) raw.language = manifest.language;
      if (raw.language != manifest.language) {
        throw SemanticError("pipeline: curated list '" + path + "' is tagged language '" +
                            raw.language + "' but the manifest language is '" +
                            manifest.language + "'");
      }
      curated.push_back(normalize_list(raw, manifest.policy));
    }
    curated_size = merge_lists(curated).size();
    for (auto& list : curated) sources.push_back(std::move(list));
  }

  PipelineResult result;
  result.merged = merge_lists(sources);

  const CorpusFormat format = manifest.corpus_format
                                  ? *manifest.corpus_format
                                  : corpus_format_from_path(manifest.corpus_path);
  std::ifstream in(manifest.corpus_path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + manifest.corpus_path);
  CategorizedCorpus corpus = read_categorized_corpus(in, format, manifest.schema,
                                                     manifest.language, manifest.corpus_path);

  CategoryVocabulary vocab = build_category_vocabulary(corpus, manifest.policy, threads);
  result.vocab_summary = summarize_vocabulary(vocab);
  result.report = analyze_coverage(result.merged, vocab);
  result.classification = classify_stopwords(result.report);
  result.sizes = ListSizes{manifest.language, pos_size, curated_size, result.merged.size()};
  return result;
}

void write_pipeline_outputs(const PipelineResult& result, const std::string& out_dir) {
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);

  write_stopword_list_file(result.merged, (dir / "merged_list.txt").string());
  write_file_bytes((dir / "coverage_report.json").string(), report_to_json(result.report));
  write_file_bytes((dir / "classification.json").string(),
                   report_to_json(result.classification));
  write_file_bytes((dir / "vocab_summary.json").string(), report_to_json(result.vocab_summary));
  write_file_bytes((dir / "list_sizes.json").string(), report_to_json(result.sizes));
}

} // namespace stopkit
