#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stopkit/corpus_io.hpp"
#include "stopkit/coverage.hpp"
#include "stopkit/errors.hpp"
#include "stopkit/lists.hpp"
#include "stopkit/pipeline.hpp"
#include "stopkit/pos_extract.hpp"
#include "stopkit/report_io.hpp"
#include "stopkit/stat_extract.hpp"
#include "stopkit/table_render.hpp"

#include <sstream>

namespace py = pybind11;
using namespace stopkit;

namespace {

NormPolicy make_policy(const std::string& punct, bool lowercase) {
  return NormPolicy{parse_punct_mode(punct), lowercase};
}

TagSet tags_from(const std::vector<std::string>& names) {
  if (names.empty()) return TagSet::function_words();
  TagSet tags;
  for (const auto& name : names) {
    auto tag = parse_upos(name);
    if (!tag) throw std::invalid_argument("unknown UPOS tag: " + name);
    tags.tags.insert(*tag);
  }
  return tags;
}

PosCorpus parse_conllu_text(const std::string& text, const std::string& language) {
  std::istringstream in(text);
  return read_conllu(in, language, "<string>");
}

CategorizedCorpus parse_corpus_text(const std::string& text, const std::string& language,
                                    const std::string& format,
                                    const std::string& category_field,
                                    const std::vector<std::string>& text_fields,
                                    const std::optional<std::string>& id_field) {
  FieldSchema schema;
  schema.category_field = category_field;
  schema.text_fields = text_fields;
  schema.id_field = id_field;
  std::istringstream in(text);
  return read_categorized_corpus(in, parse_corpus_format(format), schema, language, "<string>");
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stopword list construction and category-coverage validation";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<SemanticError>(m, "SemanticError", PyExc_ValueError);

  py::class_<NormPolicy>(m, "NormPolicy")
      .def(py::init(&make_policy), py::arg("punct") = "split", py::arg("lowercase") = true)
      .def_property_readonly("punct",
                             [](const NormPolicy& p) { return std::string(to_string(p.punct)); })
      .def_readonly("lowercase", &NormPolicy::lowercase)
      .def("__repr__", [](const NormPolicy& p) {
        return "NormPolicy(punct='" + std::string(to_string(p.punct)) +
               "', lowercase=" + (p.lowercase ? "True" : "False") + ")";
      });

  m.def("normalize_word", &normalize_word, py::arg("word"),
        py::arg("policy") = NormPolicy{});
  m.def("tokenize", &tokenize, py::arg("text"), py::arg("policy") = NormPolicy{});

  py::class_<PosToken>(m, "PosToken")
      .def_readonly("form", &PosToken::form)
      .def_property_readonly("upos",
                             [](const PosToken& t) { return std::string(to_string(t.upos)); });

  py::class_<PosCorpus>(m, "PosCorpus")
      .def_readonly("language", &PosCorpus::language)
      .def_readonly("sentences", &PosCorpus::sentences)
      .def("token_count", &PosCorpus::token_count);

  py::class_<Document>(m, "Document")
      .def(py::init([](std::string id, std::string category, std::string text) {
             return Document{std::move(id), std::move(category), std::move(text)};
           }),
           py::arg("id"), py::arg("category"), py::arg("text"))
      .def_readonly("id", &Document::id)
      .def_readonly("category", &Document::category)
      .def_readonly("text", &Document::text);

  py::class_<CategorizedCorpus>(m, "CategorizedCorpus")
      .def(py::init([](std::string language, std::vector<Document> docs) {
             return CategorizedCorpus{std::move(language), std::move(docs)};
           }),
           py::arg("language"), py::arg("docs"))
      .def_readonly("language", &CategorizedCorpus::language)
      .def_readonly("docs", &CategorizedCorpus::docs)
      .def("categories", &CategorizedCorpus::categories);

  py::class_<StopwordList>(m, "StopwordList")
      .def(py::init([](std::string language, std::string source, std::vector<std::string> entries,
                       bool normalized) {
             return StopwordList{std::move(language), std::move(source), normalized,
                                 std::move(entries)};
           }),
           py::arg("language"), py::arg("source"), py::arg("entries"),
           py::arg("normalized") = false)
      .def_readonly("language", &StopwordList::language)
      .def_readonly("source", &StopwordList::source)
      .def_readonly("normalized", &StopwordList::normalized)
      .def_readonly("entries", &StopwordList::entries)
      .def("__len__", &StopwordList::size)
      .def("__contains__", &StopwordList::contains);

  m.def("parse_conllu", &parse_conllu_text, py::arg("text"), py::arg("language"));
  m.def("read_conllu_files", &read_conllu_files, py::arg("paths"), py::arg("language"));
  m.def("parse_categorized_corpus", &parse_corpus_text, py::arg("text"), py::arg("language"),
        py::arg("format") = "tsv", py::arg("category_field") = "category",
        py::arg("text_fields") = std::vector<std::string>{"headline", "text"},
        py::arg("id_field") = std::nullopt);
  m.def(
      "read_categorized_corpus_file",
      [](const std::string& path, const std::string& language, const std::string& category_field,
         const std::vector<std::string>& text_fields, const std::optional<std::string>& id_field) {
        FieldSchema schema;
        schema.category_field = category_field;
        schema.text_fields = text_fields;
        schema.id_field = id_field;
        return read_categorized_corpus_file(path, schema, language);
      },
      py::arg("path"), py::arg("language"), py::arg("category_field") = "category",
      py::arg("text_fields") = std::vector<std::string>{"headline", "text"},
      py::arg("id_field") = std::nullopt);
  m.def("read_stopword_list_file", &read_stopword_list_file, py::arg("path"),
        py::arg("language") = std::nullopt, py::arg("source") = std::nullopt);
  m.def("write_stopword_list_file", &write_stopword_list_file, py::arg("list"), py::arg("path"));

  m.def(
      "extract_pos_stopwords",
      [](const PosCorpus& corpus, const std::vector<std::string>& tags, const NormPolicy& policy,
         const std::string& source) {
        return extract_pos_stopwords(corpus, tags_from(tags), policy, source);
      },
      py::arg("corpus"), py::arg("tags") = std::vector<std::string>{},
      py::arg("policy") = NormPolicy{}, py::arg("source") = "masakhapos");

  py::class_<TermStats>(m, "TermStats")
      .def_readonly("word", &TermStats::word)
      .def_readonly("tf_total", &TermStats::tf_total)
      .def_readonly("df", &TermStats::df)
      .def_readonly("idf", &TermStats::idf)
      .def_readonly("tfidf", &TermStats::tfidf)
      .def_readonly("entropy_norm", &TermStats::entropy_norm);

  m.def("compute_term_stats", &compute_term_stats, py::arg("corpus"),
        py::arg("policy") = NormPolicy{});
  m.def(
      "rank_candidates",
      [](const std::vector<TermStats>& stats, const std::string& method, std::size_t top_k,
         std::uint64_t min_df, const std::string& language) {
        return rank_candidates(stats, parse_rank_method(method), top_k, min_df, language);
      },
      py::arg("stats"), py::arg("method") = "freq", py::arg("top_k") = 100, py::arg("min_df") = 2,
      py::arg("language") = "");

  m.def("normalize_list", &normalize_list, py::arg("list"), py::arg("policy") = NormPolicy{});
  m.def("merge_lists", &merge_lists, py::arg("lists"));
  py::class_<ListDiff>(m, "ListDiff")
      .def_readonly("only_a", &ListDiff::only_a)
      .def_readonly("only_b", &ListDiff::only_b)
      .def_readonly("both", &ListDiff::both);
  m.def("diff_lists", &diff_lists, py::arg("a"), py::arg("b"));

  py::class_<Ratio>(m, "Ratio")
      .def_readonly("num", &Ratio::num)
      .def_readonly("den", &Ratio::den)
      .def("percent", &Ratio::percent)
      .def_property_readonly("value", &Ratio::value)
      .def("__repr__",
           [](const Ratio& r) {
             return "Ratio(" + std::to_string(r.num) + "/" + std::to_string(r.den) + ")";
           });

  py::class_<CategoryVocabulary>(m, "CategoryVocabulary")
      .def_readonly("language", &CategoryVocabulary::language)
      .def_readonly("vocab", &CategoryVocabulary::vocab)
      .def_readonly("dropped_categories", &CategoryVocabulary::dropped_categories)
      .def("category_count", &CategoryVocabulary::category_count)
      .def("union_size", &CategoryVocabulary::union_size);

  m.def("build_category_vocabulary", &build_category_vocabulary, py::arg("corpus"),
        py::arg("policy") = NormPolicy{}, py::arg("threads") = 1);

  py::class_<FoundRecord>(m, "FoundRecord")
      .def_readonly("word", &FoundRecord::word)
      .def_readonly("categories", &FoundRecord::categories);

  py::class_<CoverageReport>(m, "CoverageReport")
      .def_readonly("language", &CoverageReport::language)
      .def_readonly("list_size", &CoverageReport::list_size)
      .def_readonly("category_count", &CoverageReport::category_count)
      .def_readonly("found", &CoverageReport::found)
      .def_readonly("missing", &CoverageReport::missing)
      .def_readonly("histogram", &CoverageReport::histogram)
      .def("__eq__", [](const CoverageReport& a, const CoverageReport& b) { return a == b; })
      .def("to_json", [](const CoverageReport& r) { return report_to_json(r); });

  m.def("analyze_coverage", &analyze_coverage, py::arg("list"), py::arg("vocab"));
  m.def("coverage_report_from_json", [](const std::string& json) {
    return std::get<CoverageReport>(read_report_json(json, "<string>"));
  });

  py::class_<Classification>(m, "Classification")
      .def_readonly("language", &Classification::language)
      .def_readonly("category_count", &Classification::category_count)
      .def_readonly("list_size", &Classification::list_size)
      .def_readonly("agnostic", &Classification::agnostic)
      .def_readonly("specific", &Classification::specific)
      .def_readonly("intermediate", &Classification::intermediate)
      .def_readonly("missing", &Classification::missing)
      .def_readonly("agnostic_rate", &Classification::agnostic_rate)
      .def_readonly("specific_rate", &Classification::specific_rate)
      .def_readonly("detection_rate", &Classification::detection_rate)
      .def("found_count", &Classification::found_count)
      .def("to_json", [](const Classification& c) { return report_to_json(c); });

  m.def("classify_stopwords", &classify_stopwords, py::arg("report"));
  m.def("detection_rate", &detection_rate, py::arg("report"));

  py::class_<VocabSummary>(m, "VocabSummary")
      .def_readonly("language", &VocabSummary::language)
      .def_readonly("category_count", &VocabSummary::category_count)
      .def_readonly("union_size", &VocabSummary::union_size)
      .def_readonly("category_sizes", &VocabSummary::category_sizes)
      .def_readonly("dropped_categories", &VocabSummary::dropped_categories);
  m.def("summarize_vocabulary", &summarize_vocabulary, py::arg("vocab"));

  py::class_<ListSizes>(m, "ListSizes")
      .def(py::init([](std::string language, std::optional<std::uint64_t> pos_size,
                       std::optional<std::uint64_t> curated_size, std::uint64_t merged_size) {
             return ListSizes{std::move(language), pos_size, curated_size, merged_size};
           }),
           py::arg("language"), py::arg("pos_size") = std::nullopt,
           py::arg("curated_size") = std::nullopt, py::arg("merged_size") = 0)
      .def_readonly("language", &ListSizes::language)
      .def_readonly("pos_size", &ListSizes::pos_size)
      .def_readonly("curated_size", &ListSizes::curated_size)
      .def_readonly("merged_size", &ListSizes::merged_size);

  m.def(
      "render_table2",
      [](std::vector<VocabSummary> summaries, const std::string& format) {
        return render_table2(std::move(summaries), parse_table_format(format));
      },
      py::arg("summaries"), py::arg("format") = "md");
  m.def(
      "render_table3",
      [](std::vector<ListSizes> sizes, const std::string& format) {
        return render_table3(std::move(sizes), parse_table_format(format));
      },
      py::arg("sizes"), py::arg("format") = "md");
  m.def(
      "render_table4",
      [](std::vector<CoverageReport> reports, const std::string& format) {
        return render_table4(std::move(reports), parse_table_format(format));
      },
      py::arg("reports"), py::arg("format") = "md");

  py::class_<Manifest>(m, "Manifest")
      .def_readonly("language", &Manifest::language)
      .def_readonly("conllu_paths", &Manifest::conllu_paths)
      .def_readonly("curated_list_paths", &Manifest::curated_list_paths)
      .def_readonly("corpus_path", &Manifest::corpus_path);
  m.def("read_manifest_file", &read_manifest_file, py::arg("path"));

  py::class_<PipelineResult>(m, "PipelineResult")
      .def_readonly("merged", &PipelineResult::merged)
      .def_readonly("report", &PipelineResult::report)
      .def_readonly("classification", &PipelineResult::classification)
      .def_readonly("vocab_summary", &PipelineResult::vocab_summary)
      .def_readonly("sizes", &PipelineResult::sizes);
  m.def("run_pipeline", &run_pipeline, py::arg("manifest"), py::arg("threads") = 1);
  m.def("write_pipeline_outputs", &write_pipeline_outputs, py::arg("result"),
        py::arg("out_dir"));
}
