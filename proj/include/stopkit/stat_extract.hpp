#pragma once

#include "stopkit/corpus.hpp"
#include "stopkit/textnorm.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stopkit {

// Corpus statistics for one word. With D documents in the corpus:
//   idf          = ln(D / df)
//   tfidf        = tf_total * idf
//   entropy_norm = H / ln(D) where H = -sum_d p_d ln p_d and
//                  p_d = c(w,d) / tf_total; 0 when D == 1.
// entropy_norm is 0 when the word sits in a single document and 1 when
// its occurrences are spread uniformly over all D documents.
struct TermStats {
  std::string word;
  std::uint64_t tf_total = 0;
  std::uint64_t df = 0;
  double idf = 0.0;
  double tfidf = 0.0;
  double entropy_norm = 0.0;
};

// One TermStats per distinct normalized token, ordered by word.
// An empty corpus is a SemanticError.
std::vector<TermStats> compute_term_stats(const CategorizedCorpus& corpus,
                                          const NormPolicy& policy);

enum class RankMethod { freq, df, tfidf_low, entropy };

RankMethod parse_rank_method(std::string_view name); // "freq"|"df"|"tfidf-low"|"entropy"
std::string_view to_string(RankMethod method);

// Filters words below min_df, sorts by the method key (tfidf_low ascending,
// the others descending), breaks ties by tf_total descending then word
// ascending, and keeps the top_k. Source tag is "stat:<method>".
StopwordList rank_candidates(const std::vector<TermStats>& stats, RankMethod method,
                             std::size_t top_k, std::uint64_t min_df, std::string language);

} // namespace stopkit
