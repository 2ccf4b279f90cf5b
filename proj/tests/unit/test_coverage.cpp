#include "stopkit/coverage.hpp"

#include "stopkit/errors.hpp"
#include "../support/test_support.hpp"

#include <doctest.h>

using namespace stopkit;
using testsupport::make_normalized_list;
using testsupport::Rng;

namespace {

CategorizedCorpus corpus_of(std::vector<std::pair<std::string, std::string>> cat_texts,
                            std::string language = "zz") {
  CategorizedCorpus corpus;
  corpus.language = std::move(language);
  for (size_t i = 0; i < cat_texts.size(); ++i) {
    corpus.docs.push_back(
        Document{std::to_string(i), std::move(cat_texts[i].first), std::move(cat_texts[i].second)});
  }
  return corpus;
}

// A report whose found words are synthetic but whose histogram matches a
// published row: histogram[n-1] words present in exactly n categories.
CoverageReport report_from_histogram(const std::vector<std::uint64_t>& histogram,
                                     std::uint64_t list_size, std::string language = "zz") {
  CoverageReport report;
  report.language = std::move(language);
  report.category_count = histogram.size();
  report.list_size = list_size;
  report.histogram = histogram;

  size_t serial = 0;
  std::uint64_t found = 0;
  for (size_t n = 1; n <= histogram.size(); ++n) {
    for (std::uint64_t i = 0; i < histogram[n - 1]; ++i) {
      FoundRecord rec;
      rec.word = "w" + std::to_string(serial++);
      for (size_t c = 0; c < n; ++c) rec.categories.insert("cat" + std::to_string(c));
      report.found.push_back(std::move(rec));
      ++found;
    }
  }
  for (std::uint64_t i = found; i < list_size; ++i) {
    report.missing.push_back("m" + std::to_string(i));
  }
  return report;
}

} // namespace

TEST_CASE("ratio renders round-half-up percentages") {
  CHECK(Ratio{319, 329}.percent() == "97.0");
  CHECK(Ratio{62, 160}.percent() == "38.8"); // 38.75 rounds up
  CHECK(Ratio{466, 690}.percent() == "67.5");
  CHECK(Ratio{0, 10}.percent() == "0.0");
  CHECK(Ratio{10, 10}.percent() == "100.0");
  CHECK(Ratio{1, 2000}.percent() == "0.1"); // 0.05 rounds up
  CHECK(Ratio{1, 151}.percent() == "0.7");  // 0.66..., not truncated to 0.6
  CHECK(Ratio{23, 25}.percent() == "92.0");
}

TEST_CASE("vocabulary for a single category") {
  CategorizedCorpus corpus = corpus_of({{"sports", "a b a"}});
  CategoryVocabulary vocab = build_category_vocabulary(corpus, NormPolicy{});
  REQUIRE(vocab.category_count() == 1);
  CHECK(vocab.vocab.at("sports") == std::set<std::string>{"a", "b"});
  CHECK(vocab.union_size() == 2);
}

TEST_CASE("shared tokens are counted once in the union") {
  CategorizedCorpus corpus = corpus_of({{"c1", "x y"}, {"c2", "x z"}});
  CategoryVocabulary vocab = build_category_vocabulary(corpus, NormPolicy{});
  CHECK(vocab.category_count() == 2);
  CHECK(vocab.vocab.at("c1").count("x") == 1);
  CHECK(vocab.vocab.at("c2").count("x") == 1);
  CHECK(vocab.union_size() == 3);
}

TEST_CASE("categories without tokens are dropped with a record") {
  CategorizedCorpus corpus = corpus_of({{"live", "a b"}, {"empty", "..."}});
  CategoryVocabulary vocab = build_category_vocabulary(corpus, NormPolicy{});
  CHECK(vocab.category_count() == 1);
  CHECK(vocab.dropped_categories == std::vector<std::string>{"empty"});
}

TEST_CASE("empty corpus is an error") {
  CategorizedCorpus corpus;
  corpus.language = "zz";
  CHECK_THROWS_WITH_AS(build_category_vocabulary(corpus, NormPolicy{}),
                       doctest::Contains("empty corpus"), SemanticError);

  CategorizedCorpus no_tokens = corpus_of({{"c", "..."}});
  CHECK_THROWS_AS(build_category_vocabulary(no_tokens, NormPolicy{}), SemanticError);
}

TEST_CASE("multi-threaded vocabulary equals single-threaded") {
  Rng rng(51);
  for (int i = 0; i < 30; ++i) {
    CategorizedCorpus corpus = testsupport::random_corpus(rng, 20, 5);
    CategoryVocabulary one, four;
    bool failed = false;
    try {
      one = build_category_vocabulary(corpus, NormPolicy{}, 1);
    } catch (const SemanticError&) {
      failed = true;
    }
    if (failed) continue; // all-empty corpus, same failure either way
    four = build_category_vocabulary(corpus, NormPolicy{}, 4);
    CHECK(one.vocab == four.vocab);
    CHECK(one.dropped_categories == four.dropped_categories);
  }
}

TEST_CASE("analyze finds words per category") {
  CategorizedCorpus corpus = corpus_of({{"c1", "a b"}, {"c2", "a c"}});
  CategoryVocabulary vocab = build_category_vocabulary(corpus, NormPolicy{});

  CoverageReport report = analyze_coverage(make_normalized_list("zz", {"a"}), vocab);
  REQUIRE(report.found.size() == 1);
  CHECK(report.found[0].word == "a");
  CHECK(report.found[0].categories == std::set<std::string>{"c1", "c2"});
  CHECK(report.histogram == std::vector<std::uint64_t>{0, 1});
  CHECK(report.missing.empty());
  CHECK(report.list_size == 1);
}

TEST_CASE("analyze reports absent words as missing") {
  CategorizedCorpus corpus = corpus_of({{"c1", "a"}});
  CategoryVocabulary vocab = build_category_vocabulary(corpus, NormPolicy{});
  CoverageReport report = analyze_coverage(make_normalized_list("zz", {"z"}), vocab);
  CHECK(report.found.empty());
  CHECK(report.missing == std::vector<std::string>{"z"});
  CHECK(report.histogram == std::vector<std::uint64_t>{0});
}

TEST_CASE("analyze error contract") {
  CategorizedCorpus corpus = corpus_of({{"c1", "a"}});
  CategoryVocabulary vocab = build_category_vocabulary(corpus, NormPolicy{});

  CHECK_THROWS_WITH_AS(analyze_coverage(make_normalized_list("other", {"a"}), vocab),
                       doctest::Contains("language mismatch"), SemanticError);
  CHECK_THROWS_WITH_AS(analyze_coverage(make_normalized_list("zz", {}), vocab),
                       doctest::Contains("empty stopword list"), SemanticError);
  StopwordList raw{"zz", "raw", false, {"a"}};
  CHECK_THROWS_AS(analyze_coverage(raw, vocab), SemanticError);
}

TEST_CASE("classify partitions found words") {
  // K = 3: one word everywhere, one in a single category, one in two
  CategorizedCorpus corpus =
      corpus_of({{"c1", "all one two"}, {"c2", "all two"}, {"c3", "all"}});
  CategoryVocabulary vocab = build_category_vocabulary(corpus, NormPolicy{});
  CoverageReport report =
      analyze_coverage(make_normalized_list("zz", {"all", "one", "two", "zzz"}), vocab);
  Classification cls = classify_stopwords(report);

  CHECK(cls.agnostic == std::vector<std::string>{"all"});
  CHECK(cls.specific == std::vector<std::string>{"one"});
  CHECK(cls.intermediate == std::vector<std::string>{"two"});
  CHECK(cls.missing == std::vector<std::string>{"zzz"});
  CHECK(cls.found_count() == 3);
  CHECK(cls.detection_rate == Ratio{3, 4});
  REQUIRE(cls.agnostic_rate.has_value());
  CHECK(*cls.agnostic_rate == Ratio{1, 3});
}

TEST_CASE("classify with K=1 puts everything in agnostic") {
  CategorizedCorpus corpus = corpus_of({{"only", "a b"}});
  CategoryVocabulary vocab = build_category_vocabulary(corpus, NormPolicy{});
  CoverageReport report = analyze_coverage(make_normalized_list("zz", {"a", "b"}), vocab);
  Classification cls = classify_stopwords(report);
  CHECK(cls.agnostic == std::vector<std::string>{"a", "b"});
  CHECK(cls.specific.empty());
  CHECK(cls.intermediate.empty());
}

TEST_CASE("classify with nothing found leaves the rates absent") {
  CategorizedCorpus corpus = corpus_of({{"c1", "a"}});
  CategoryVocabulary vocab = build_category_vocabulary(corpus, NormPolicy{});
  CoverageReport report = analyze_coverage(make_normalized_list("zz", {"q", "r"}), vocab);
  Classification cls = classify_stopwords(report);
  CHECK(!cls.agnostic_rate.has_value());
  CHECK(!cls.specific_rate.has_value());
  CHECK(cls.detection_rate == Ratio{0, 2});
  CHECK(cls.detection_rate.percent() == "0.0");
}

TEST_CASE("published Somali distribution classifies to 92.0 / 0.0") {
  CoverageReport report = report_from_histogram({0, 1, 1, 0, 0, 0, 23}, 30, "som");
  CHECK(detection_rate(report).percent() == "83.3");
  Classification cls = classify_stopwords(report);
  CHECK(cls.found_count() == 25);
  REQUIRE(cls.agnostic_rate.has_value());
  CHECK(cls.agnostic_rate->percent() == "92.0");
  CHECK(cls.specific_rate->percent() == "0.0");
}

TEST_CASE("published Nigerian Pidgin distribution classifies to 63.1 / 2.4") {
  CoverageReport report = report_from_histogram({2, 7, 11, 11, 53}, 97, "pcm");
  Classification cls = classify_stopwords(report);
  CHECK(cls.found_count() == 84);
  CHECK(detection_rate(report).percent() == "86.6");
  CHECK(cls.agnostic_rate->percent() == "63.1");
  CHECK(cls.specific_rate->percent() == "2.4");
}

TEST_CASE("published Kirundi distribution") {
  CoverageReport report = report_from_histogram({3, 0, 0, 1, 6, 45}, 59, "run");
  CHECK(report.found.size() == 55);
  CHECK(detection_rate(report).percent() == "93.2");
  Classification cls = classify_stopwords(report);
  CHECK(cls.agnostic_rate->percent() == "81.8");
}

TEST_CASE("histogram mass equals found count") {
  Rng rng(61);
  NormPolicy policy;
  for (int i = 0; i < 120; ++i) {
    CategorizedCorpus corpus = testsupport::random_corpus(rng, 15, 5);
    auto words = testsupport::random_normalized_list(rng, corpus, policy, 20);
    if (words.empty()) continue;
    CategoryVocabulary vocab;
    try {
      vocab = build_category_vocabulary(corpus, policy);
    } catch (const SemanticError&) {
      continue;
    }
    CoverageReport report = analyze_coverage(make_normalized_list("zz", words), vocab);
    std::uint64_t mass = 0;
    for (auto h : report.histogram) mass += h;
    CHECK(mass == report.found.size());
    CHECK(report.found.size() + report.missing.size() == report.list_size);
  }
}

TEST_CASE("duplicating every document leaves the report unchanged") {
  Rng rng(62);
  NormPolicy policy;
  for (int i = 0; i < 60; ++i) {
    CategorizedCorpus corpus = testsupport::random_corpus(rng, 10, 4);
    auto words = testsupport::random_normalized_list(rng, corpus, policy, 15);
    if (words.empty()) continue;

    CategorizedCorpus doubled = corpus;
    for (auto doc : corpus.docs) {
      doc.id += "_copy";
      doubled.docs.push_back(std::move(doc));
    }
    CategoryVocabulary vocab, vocab2;
    try {
      vocab = build_category_vocabulary(corpus, policy);
    } catch (const SemanticError&) {
      continue;
    }
    vocab2 = build_category_vocabulary(doubled, policy);
    StopwordList list = make_normalized_list("zz", words);
    CHECK(analyze_coverage(list, vocab) == analyze_coverage(list, vocab2));
  }
}

TEST_CASE("appending documents never shrinks coverage") {
  Rng rng(63);
  NormPolicy policy;
  for (int i = 0; i < 60; ++i) {
    CategorizedCorpus corpus = testsupport::random_corpus(rng, 10, 4);
    auto words = testsupport::random_normalized_list(rng, corpus, policy, 15);
    if (words.empty()) continue;

    CategorizedCorpus extended = corpus;
    CategorizedCorpus extra = testsupport::random_corpus(rng, 5, 4);
    for (auto& doc : extra.docs) {
      doc.id = "x_" + doc.id;
      extended.docs.push_back(doc);
    }

    CategoryVocabulary before, after;
    try {
      before = build_category_vocabulary(corpus, policy);
      after = build_category_vocabulary(extended, policy);
    } catch (const SemanticError&) {
      continue;
    }
    StopwordList list = make_normalized_list("zz", words);
    CoverageReport rb = analyze_coverage(list, before);
    CoverageReport ra = analyze_coverage(list, after);

    std::map<std::string, std::set<std::string>> found_after;
    for (const auto& rec : ra.found) found_after[rec.word] = rec.categories;
    for (const auto& rec : rb.found) {
      REQUIRE(found_after.count(rec.word) == 1); // never found -> missing
      for (const auto& cat : rec.categories) {
        CHECK(found_after[rec.word].count(cat) == 1);
      }
    }
  }
}

TEST_CASE("analyze matches the brute-force oracle") {
  Rng rng(64);
  NormPolicy policy;
  int checked = 0;
  for (int i = 0; checked < 80; ++i) {
    REQUIRE(i < 500);
    CategorizedCorpus corpus = testsupport::random_corpus(rng, 20, 6);
    auto words = testsupport::random_normalized_list(rng, corpus, policy, 30);
    if (words.empty()) continue;
    CategoryVocabulary vocab;
    try {
      vocab = build_category_vocabulary(corpus, policy);
    } catch (const SemanticError&) {
      continue;
    }
    ++checked;

    CoverageReport report = analyze_coverage(make_normalized_list("zz", words), vocab);
    auto oracle = testsupport::oracle_coverage(words, corpus, policy);

    CHECK(report.category_count == oracle.category_count);
    CHECK(report.missing == oracle.missing);
    REQUIRE(report.found.size() == oracle.found.size());
    for (const auto& rec : report.found) {
      REQUIRE(oracle.found.count(rec.word) == 1);
      CHECK(rec.categories == oracle.found.at(rec.word));
    }
    for (size_t n = 1; n <= report.histogram.size(); ++n) {
      const auto it = oracle.histogram.find(n);
      CHECK(report.histogram[n - 1] == (it == oracle.histogram.end() ? 0 : it->second));
    }

    Classification cls = classify_stopwords(report);
    CHECK(cls.agnostic == oracle.agnostic);
    CHECK(cls.specific == oracle.specific);
    CHECK(cls.intermediate == oracle.intermediate);
  }
}
