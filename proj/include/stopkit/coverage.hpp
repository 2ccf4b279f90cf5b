#pragma once

#include "stopkit/corpus.hpp"
#include "stopkit/textnorm.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace stopkit {

// An exact fraction, rendered as a percentage with one decimal,
// round-half-up (319/329 -> "97.0", 62/160 -> "38.8").
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  int percent_tenths() const; // round-half-up of 1000*num/den
  std::string percent() const;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Ratio&) const = default;
};

// Per-category sets of unique normalized tokens. Categories whose
// documents tokenize to nothing are dropped and recorded.
struct CategoryVocabulary {
  std::string language;
  std::map<std::string, std::set<std::string>> vocab;
  std::vector<std::string> dropped_categories;

  size_t category_count() const { return vocab.size(); } // K
  size_t union_size() const;
};

// vocab[c] = union over documents labeled c of their token sets.
// threads > 1 shards the documents; the set-union merge makes the result
// independent of the schedule. Empty corpus is a SemanticError.
CategoryVocabulary build_category_vocabulary(const CategorizedCorpus& corpus,
                                             const NormPolicy& policy,
                                             unsigned threads = 1);

struct FoundRecord {
  std::string word;
  std::set<std::string> categories;
  bool operator==(const FoundRecord&) const = default;
};

// Where each stopword of a list shows up across the categories of a
// corpus. histogram[N-1] counts the found words present in exactly N
// categories, N = 1..K. generated_at is ignored by equality.
struct CoverageReport {
  std::string language;
  std::uint64_t list_size = 0;
  std::uint64_t category_count = 0; // K
  std::vector<FoundRecord> found;   // sorted by word
  std::vector<std::string> missing; // sorted
  std::vector<std::uint64_t> histogram;
  std::optional<std::string> generated_at;

  bool operator==(const CoverageReport& other) const;
};

// Checks every list entry against the per-category vocabularies.
// Languages must match and the list must be normalized and non-empty.
CoverageReport analyze_coverage(const StopwordList& list, const CategoryVocabulary& vocab);

// Found words partitioned by category presence: in all K categories
// (domain-agnostic), in exactly one (domain-specific), the rest
// (intermediate). With K = 1 every found word counts as agnostic and the
// specific bucket stays empty. Rates over found are absent when nothing
// was found.
struct Classification {
  std::string language;
  std::uint64_t category_count = 0;
  std::uint64_t list_size = 0;
  std::vector<std::string> agnostic;
  std::vector<std::string> specific;
  std::vector<std::string> intermediate;
  std::vector<std::string> missing;

  std::optional<Ratio> agnostic_rate; // |agnostic| / |found|
  std::optional<Ratio> specific_rate; // |specific| / |found|
  Ratio detection_rate;               // |found| / list_size

  std::uint64_t found_count() const {
    return agnostic.size() + specific.size() + intermediate.size();
  }
  bool operator==(const Classification&) const = default;
};

Classification classify_stopwords(const CoverageReport& report);

Ratio detection_rate(const CoverageReport& report);

} // namespace stopkit
