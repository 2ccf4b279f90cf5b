#include "stopkit/corpus_io.hpp"
#include "stopkit/coverage.hpp"
#include "stopkit/errors.hpp"
#include "stopkit/lists.hpp"
#include "stopkit/pipeline.hpp"
#include "stopkit/pos_extract.hpp"
#include "stopkit/report_io.hpp"
#include "stopkit/stat_extract.hpp"
#include "stopkit/table_render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace stopkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFormat = 2;
constexpr int kExitSemantic = 3;

// --out omitted: data goes to stdout; diagnostics always go to stderr.
void emit(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << bytes;
  } else {
    write_file_bytes(out_path, bytes);
  }
}

struct PolicyFlags {
  std::string punct = "split";
  bool no_lowercase = false;

  NormPolicy policy() const {
    return NormPolicy{parse_punct_mode(punct), !no_lowercase};
  }
};

void add_policy_flags(CLI::App* cmd, PolicyFlags& flags) {
  cmd->add_option("--punct", flags.punct, "Punctuation handling")
      ->check(CLI::IsMember({"strip", "split", "keep-internal"}))
      ->capture_default_str();
  cmd->add_flag("--no-lowercase", flags.no_lowercase, "Keep original casing");
}

FieldSchema schema_from(const std::string& category_field, const std::string& text_fields,
                        const std::string& id_field) {
  FieldSchema schema;
  schema.category_field = category_field;
  schema.text_fields.clear();
  std::istringstream in(text_fields);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::string t = trim_whitespace(item);
    if (!t.empty()) schema.text_fields.push_back(std::move(t));
  }
  if (!id_field.empty()) schema.id_field = id_field;
  return schema;
}

CategorizedCorpus load_corpus(const std::string& path, const std::string& format,
                              const FieldSchema& schema, const std::string& language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open file: " + path);
  CorpusFormat fmt = format.empty() ? corpus_format_from_path(path) : parse_corpus_format(format);
  return read_categorized_corpus(in, fmt, schema, language, path);
}

std::string serialized_list(const StopwordList& list) {
  std::ostringstream out;
  write_stopword_list(list, out);
  return out.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stopword list construction and category-coverage validation"};
  app.require_subcommand(1);
  app.set_config("--config");

  // extract-pos
  std::vector<std::string> conllu_paths;
  std::string lang, tags_csv = TagSet::function_words().to_string(), out_path;
  PolicyFlags pos_policy;
  auto* extract_pos = app.add_subcommand("extract-pos", "Harvest stopwords from CoNLL-U by UPOS tag");
  extract_pos->add_option("--conllu", conllu_paths, "CoNLL-U files")->required()->expected(-1);
  extract_pos->add_option("--lang", lang, "ISO-639 language code")->required();
  extract_pos->add_option("--tags", tags_csv, "Comma-separated UPOS tags")->capture_default_str();
  add_policy_flags(extract_pos, pos_policy);
  extract_pos->add_option("--out", out_path, "Output list file (default: stdout)");

  // extract-stat
  std::string corpus_path, method = "freq", corpus_format;
  std::string category_field = "category", text_fields = "headline,text", id_field;
  std::size_t top_k = 100;
  std::uint64_t min_df = 2;
  PolicyFlags stat_policy;
  auto* extract_stat =
      app.add_subcommand("extract-stat", "Generate stopword candidates from corpus statistics");
  extract_stat->add_option("--corpus", corpus_path, "Categorized corpus file")->required();
  extract_stat->add_option("--lang", lang, "ISO-639 language code")->required();
  extract_stat->add_option("--method", method, "Ranking method")
      ->check(CLI::IsMember({"freq", "df", "tfidf-low", "entropy"}))
      ->capture_default_str();
  extract_stat->add_option("--top", top_k, "Number of candidates")->check(CLI::PositiveNumber);
  extract_stat->add_option("--min-df", min_df, "Minimum document frequency")
      ->check(CLI::PositiveNumber);
  extract_stat->add_option("--format", corpus_format, "Corpus format (tsv|csv|jsonl)")
      ->check(CLI::IsMember({"tsv", "csv", "jsonl"}));
  extract_stat->add_option("--category-field", category_field, "Category column")
      ->capture_default_str();
  extract_stat->add_option("--text-fields", text_fields, "Comma-separated text columns")
      ->capture_default_str();
  extract_stat->add_option("--id-field", id_field, "Document id column (default: record index)");
  add_policy_flags(extract_stat, stat_policy);
  extract_stat->add_option("--out", out_path, "Output list file (default: stdout)");

  // merge
  std::vector<std::string> list_paths;
  PolicyFlags merge_policy;
  auto* merge = app.add_subcommand("merge", "Normalize and merge stopword lists");
  merge->add_option("lists", list_paths, "Input list files")->required()->expected(-1);
  merge->add_option("--lang", lang, "Language; defaults to list metadata");
  add_policy_flags(merge, merge_policy);
  merge->add_option("--out", out_path, "Output list file (default: stdout)");

  // diff
  std::string list_a, list_b, out_prefix;
  PolicyFlags diff_policy;
  auto* diff = app.add_subcommand("diff", "Compare two stopword lists");
  diff->add_option("a", list_a, "First list")->required();
  diff->add_option("b", list_b, "Second list")->required();
  diff->add_option("--lang", lang, "Language; defaults to list metadata");
  add_policy_flags(diff, diff_policy);
  diff->add_option("--out-prefix", out_prefix,
                   "Write <prefix>.only_a, <prefix>.only_b, <prefix>.both (default: stdout)");

  // analyze
  std::string list_path, list_lang, summary_out;
  unsigned threads = 1;
  PolicyFlags analyze_policy;
  auto* analyze = app.add_subcommand("analyze", "Measure stopword presence across categories");
  analyze->add_option("--corpus", corpus_path, "Categorized corpus file")->required();
  analyze->add_option("--list", list_path, "Stopword list file")->required();
  analyze->add_option("--lang", lang, "Corpus language")->required();
  analyze->add_option("--list-lang", list_lang, "List language (default: list metadata or --lang)");
  analyze->add_option("--format", corpus_format, "Corpus format (tsv|csv|jsonl)")
      ->check(CLI::IsMember({"tsv", "csv", "jsonl"}));
  analyze->add_option("--category-field", category_field, "Category column")
      ->capture_default_str();
  analyze->add_option("--text-fields", text_fields, "Comma-separated text columns")
      ->capture_default_str();
  analyze->add_option("--id-field", id_field, "Document id column (default: record index)");
  analyze->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  add_policy_flags(analyze, analyze_policy);
  analyze->add_option("--out", out_path, "Coverage report file (default: stdout)");
  analyze->add_option("--summary-out", summary_out, "Also write a vocabulary summary");

  // classify
  std::string report_path;
  auto* classify = app.add_subcommand("classify", "Partition a coverage report's stopwords");
  classify->add_option("--report", report_path, "Coverage report file")->required();
  classify->add_option("--out", out_path, "Classification file (default: stdout)");

  // stats
  auto* stats = app.add_subcommand("stats", "Print the distribution row for a coverage report");
  stats->add_option("--report", report_path, "Coverage report file")->required();

  // report
  std::vector<std::string> in_paths;
  std::string table, table_format = "md";
  auto* report_cmd = app.add_subcommand("report", "Render summary tables from report files");
  report_cmd->add_option("table", table, "Which table to render")
      ->check(CLI::IsMember({"table2", "table3", "table4"}))
      ->required();
  report_cmd->add_option("--in", in_paths, "Input report files")->required()->expected(-1);
  report_cmd->add_option("--format", table_format, "Output format")
      ->check(CLI::IsMember({"md", "csv", "json"}))
      ->capture_default_str();
  report_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  // pipeline
  std::string manifest_path, out_dir;
  auto* pipeline =
      app.add_subcommand("pipeline", "Run the full extraction and validation flow for one language");
  pipeline->add_option("--manifest", manifest_path, "Manifest file")->required();
  pipeline->add_option("--out-dir", out_dir, "Output directory")->required();
  pipeline->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*extract_pos) {
      PosCorpus corpus = read_conllu_files(conllu_paths, lang);
      StopwordList list = extract_pos_stopwords(corpus, TagSet::parse(tags_csv),
                                                pos_policy.policy());
      emit(serialized_list(list), out_path);
    } else if (*extract_stat) {
      FieldSchema schema = schema_from(category_field, text_fields, id_field);
      CategorizedCorpus corpus = load_corpus(corpus_path, corpus_format, schema, lang);
      auto ts = compute_term_stats(corpus, stat_policy.policy());
      StopwordList list = rank_candidates(ts, parse_rank_method(method), top_k, min_df, lang);
      emit(serialized_list(list), out_path);
    } else if (*merge) {
      std::vector<StopwordList> lists;
      for (const auto& path : list_paths) {
        StopwordList raw = read_stopword_list_file(
            path, lang.empty() ? std::nullopt : std::optional<std::string>(lang), std::nullopt);
        if (raw.language.empty()) raw.language = lang;
        lists.push_back(normalize_list(raw, merge_policy.policy()));
      }
      emit(serialized_list(merge_lists(lists)), out_path);
    } else if (*diff) {
      auto load = [&](const std::string& path) {
        StopwordList raw = read_stopword_list_file(
            path, lang.empty() ? std::nullopt : std::optional<std::string>(lang), std::nullopt);
        if (raw.language.empty()) raw.language = lang;
        return normalize_list(raw, diff_policy.policy());
      };
      ListDiff d = diff_lists(load(list_a), load(list_b));
      if (out_prefix.empty()) {
        std::cout << serialized_list(d.only_a) << serialized_list(d.only_b)
                  << serialized_list(d.both);
      } else {
        write_stopword_list_file(d.only_a, out_prefix + ".only_a");
        write_stopword_list_file(d.only_b, out_prefix + ".only_b");
        write_stopword_list_file(d.both, out_prefix + ".both");
      }
    } else if (*analyze) {
      FieldSchema schema = schema_from(category_field, text_fields, id_field);
      CategorizedCorpus corpus = load_corpus(corpus_path, corpus_format, schema, lang);
      NormPolicy policy = analyze_policy.policy();

      std::optional<std::string> want_lang;
      if (!list_lang.empty()) want_lang = list_lang;
      StopwordList raw = read_stopword_list_file(list_path, want_lang, std::nullopt);
      if (raw.language.empty()) raw.language = lang;
      StopwordList list = normalize_list(raw, policy);

      CategoryVocabulary vocab = build_category_vocabulary(corpus, policy, threads);
      CoverageReport report = analyze_coverage(list, vocab);
      emit(report_to_json(report), out_path);
      if (!summary_out.empty()) {
        write_file_bytes(summary_out, report_to_json(summarize_vocabulary(vocab)));
      }
    } else if (*classify) {
      std::ifstream in(report_path, std::ios::binary);
      if (!in) throw FormatError("cannot open file: " + report_path);
      CoverageReport report = read_coverage_report(in, report_path);
      emit(report_to_json(classify_stopwords(report)), out_path);
    } else if (*stats) {
      std::ifstream in(report_path, std::ios::binary);
      if (!in) throw FormatError("cannot open file: " + report_path);
      CoverageReport report = read_coverage_report(in, report_path);
      std::cout << render_table4({report}, TableFormat::md);
    } else if (*report_cmd) {
      TableFormat fmt = parse_table_format(table_format);
      std::string rendered;
      if (table == "table2") {
        std::vector<VocabSummary> summaries;
        for (const auto& path : in_paths) {
          std::ifstream in(path, std::ios::binary);
          if (!in) throw FormatError("cannot open file: " + path);
          summaries.push_back(read_vocab_summary(in, path));
        }
        rendered = render_table2(std::move(summaries), fmt);
      } else if (table == "table3") {
        std::vector<ListSizes> sizes;
        for (const auto& path : in_paths) {
          std::ifstream in(path, std::ios::binary);
          if (!in) throw FormatError("cannot open file: " + path);
          sizes.push_back(read_list_sizes(in, path));
        }
        rendered = render_table3(std::move(sizes), fmt);
      } else {
        std::vector<CoverageReport> reports;
        for (const auto& path : in_paths) {
          std::ifstream in(path, std::ios::binary);
          if (!in) throw FormatError("cannot open file: " + path);
          reports.push_back(read_coverage_report(in, path));
        }
        rendered = render_table4(std::move(reports), fmt);
      }
      emit(rendered, out_path);
    } else if (*pipeline) {
      Manifest manifest = read_manifest_file(manifest_path);
      PipelineResult result = run_pipeline(manifest, threads);
      write_pipeline_outputs(result, out_dir);
    }
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitOk;
}
