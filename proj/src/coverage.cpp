#include "stopkit/coverage.hpp"

#include "stopkit/errors.hpp"

#include <algorithm>
#include <future>

namespace stopkit {

int Ratio::percent_tenths() const {
  // round-half-up of 1000*num/den in integer arithmetic
  return static_cast<int>((2000 * num + den) / (2 * den));
}

std::string Ratio::percent() const {
  const int tenths = percent_tenths();
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

size_t CategoryVocabulary::union_size() const {
  std::set<std::string> all;
  for (const auto& [cat, words] : vocab) {
    all.insert(words.begin(), words.end());
  }
  return all.size();
}

namespace {

using VocabMap = std::map<std::string, std::set<std::string>>;

VocabMap build_shard(const CategorizedCorpus& corpus, const NormPolicy& policy,
                     size_t begin, size_t end) {
  VocabMap vocab;
  for (size_t d = begin; d < end; ++d) {
    const Document& doc = corpus.docs[d];
    auto& words = vocab[doc.category];
    for (auto& token : tokenize(doc.text, policy)) {
      words.insert(std::move(token));
    }
  }
  return vocab;
}

} // namespace

CategoryVocabulary build_category_vocabulary(const CategorizedCorpus& corpus,
                                             const NormPolicy& policy, unsigned threads) {
  if (corpus.docs.empty()) throw SemanticError("empty corpus");
  if (threads == 0) threads = 1;

  VocabMap merged;
  if (threads == 1 || corpus.docs.size() < 2 * threads) {
    merged = build_shard(corpus, policy, 0, corpus.docs.size());
  } else {
    const size_t per_shard = (corpus.docs.size() + threads - 1) / threads;
    std::vector<std::future<VocabMap>> futures;
    for (size_t begin = 0; begin < corpus.docs.size(); begin += per_shard) {
      const size_t end = std::min(begin + per_shard, corpus.docs.size());
      futures.push_back(std::async(std::launch::async, build_shard, std::cref(corpus),
                                   std::cref(policy), begin, end));
    }
    for (auto& f : futures) {
      VocabMap shard = f.get();
      for (auto& [cat, words] : shard) {
        merged[cat].insert(words.begin(), words.end());
      }
    }
  }

  CategoryVocabulary result;
  result.language = corpus.language;
  for (auto& [cat, words] : merged) {
    if (words.empty()) {
      result.dropped_categories.push_back(cat);
    } else {
      result.vocab.emplace(cat, std::move(words));
    }
  }
  if (result.vocab.empty()) {
    throw SemanticError("corpus produced no tokens in any category");
  }
  return result;
}

bool CoverageReport::operator==(const CoverageReport& other) const {
  return language == other.language && list_size == other.list_size &&
         category_count == other.category_count && found == other.found &&
         missing == other.missing && histogram == other.histogram;
  // generated_at deliberately excluded
}

CoverageReport analyze_coverage(const StopwordList& list, const CategoryVocabulary& vocab) {
  if (!list.normalized) throw SemanticError("analyze: stopword list is not normalized");
  if (list.language != vocab.language) {
    throw SemanticError("analyze: language mismatch between list (" + list.language +
                        ") and corpus (" + vocab.language + ")");
  }
  if (list.entries.empty()) throw SemanticError("empty stopword list");

  CoverageReport report;
  report.language = list.language;
  report.list_size = list.entries.size();
  report.category_count = vocab.category_count();
  report.histogram.assign(vocab.category_count(), 0);

  for (const auto& word : list.entries) {
    std::set<std::string> present;
    for (const auto& [cat, words] : vocab.vocab) {
      if (words.count(word)) present.insert(cat);
    }
    if (present.empty()) {
      report.missing.push_back(word);
    } else {
      ++report.histogram[present.size() - 1];
      report.found.push_back(FoundRecord{word, std::move(present)});
    }
  }
  return report;
}

Classification classify_stopwords(const CoverageReport& report) {
  const std::uint64_t k = report.category_count;
  if (k == 0) throw SemanticError("classify: report has no categories");
  if (report.histogram.size() != k) {
    throw SemanticError("classify: histogram does not span 1..K");
  }

  Classification cls;
  cls.language = report.language;
  cls.category_count = k;
  cls.list_size = report.list_size;
  cls.missing = report.missing;

  for (const auto& rec : report.found) {
    const size_t n = rec.categories.size();
    if (n == k) {
      cls.agnostic.push_back(rec.word); // with K == 1 agnostic wins over specific
    } else if (n == 1) {
      cls.specific.push_back(rec.word);
    } else {
      cls.intermediate.push_back(rec.word);
    }
  }

  std::sort(cls.agnostic.begin(), cls.agnostic.end());
  std::sort(cls.specific.begin(), cls.specific.end());
  std::sort(cls.intermediate.begin(), cls.intermediate.end());
  std::sort(cls.missing.begin(), cls.missing.end());

  const std::uint64_t found = cls.found_count();
  if (found + cls.missing.size() != report.list_size) {
    throw SemanticError("classify: found + missing does not equal list size");
  }
  if (found > 0) {
    cls.agnostic_rate = Ratio{cls.agnostic.size(), found};
    cls.specific_rate = Ratio{cls.specific.size(), found};
  }
  cls.detection_rate = stopkit::detection_rate(report);
  return cls;
}

Ratio detection_rate(const CoverageReport& report) {
  if (report.list_size == 0) throw SemanticError("detection rate: empty stopword list");
  return Ratio{report.found.size(), report.list_size};
}

} // namespace stopkit
