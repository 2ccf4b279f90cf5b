#include "stopkit/stat_extract.hpp"

#include "stopkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace stopkit {

std::vector<TermStats> compute_term_stats(const CategorizedCorpus& corpus,
                                          const NormPolicy& policy) {
  const size_t doc_count = corpus.docs.size();
  if (doc_count == 0) throw SemanticError("empty corpus");

  // word -> per-document occurrence counts, doc order preserved for a
  // deterministic entropy summation.
  std::map<std::string, std::map<size_t, std::uint64_t>> counts;
  for (size_t d = 0; d < doc_count; ++d) {
    for (auto& token : tokenize(corpus.docs[d].text, policy)) {
      ++counts[std::move(token)][d];
    }
  }

  const double log_docs = doc_count > 1 ? std::log(static_cast<double>(doc_count)) : 0.0;

  std::vector<TermStats> stats;
  stats.reserve(counts.size());
  for (const auto& [word, per_doc] : counts) {
    TermStats ts;
    ts.word = word;
    ts.df = per_doc.size();
    for (const auto& [doc, c] : per_doc) ts.tf_total += c;

    ts.idf = std::log(static_cast<double>(doc_count) / static_cast<double>(ts.df));
    if (ts.df == doc_count) ts.idf = 0.0; // exact endpoint, no log rounding
    ts.tfidf = static_cast<double>(ts.tf_total) * ts.idf;

    if (doc_count == 1 || ts.df == 1) {
      ts.entropy_norm = 0.0;
    } else {
      bool uniform_everywhere = ts.df == doc_count;
      const std::uint64_t first = per_doc.begin()->second;
      double h = 0.0;
      for (const auto& [doc, c] : per_doc) {
        if (c != first) uniform_everywhere = false;
        const double p = static_cast<double>(c) / static_cast<double>(ts.tf_total);
        h -= p * std::log(p);
      }
      ts.entropy_norm = uniform_everywhere ? 1.0 : std::clamp(h / log_docs, 0.0, 1.0);
    }
    stats.push_back(std::move(ts));
  }
  return stats;
}

RankMethod parse_rank_method(std::string_view name) {
  if (name == "freq") return RankMethod::freq;
  if (name == "df") return RankMethod::df;
  if (name == "tfidf-low" || name == "tfidf_low") return RankMethod::tfidf_low;
  if (name == "entropy") return RankMethod::entropy;
  throw std::invalid_argument("unknown ranking method: " + std::string(name));
}

std::string_view to_string(RankMethod method) {
  switch (method) {
    case RankMethod::freq: return "freq";
    case RankMethod::df: return "df";
    case RankMethod::tfidf_low: return "tfidf-low";
    case RankMethod::entropy: return "entropy";
  }
  return "freq";
}

StopwordList rank_candidates(const std::vector<TermStats>& stats, RankMethod method,
                             std::size_t top_k, std::uint64_t min_df, std::string language) {
  if (top_k < 1) throw std::invalid_argument("top_k must be >= 1");
  if (min_df < 1) throw std::invalid_argument("min_df must be >= 1");

  std::vector<const TermStats*> pool;
  pool.reserve(stats.size());
  for (const auto& ts : stats) {
    if (ts.df >= min_df) pool.push_back(&ts);
  }

  auto key_less = [method](const TermStats* a, const TermStats* b) {
    switch (method) {
      case RankMethod::freq:
        if (a->tf_total != b->tf_total) return a->tf_total > b->tf_total;
        break;
      case RankMethod::df:
        if (a->df != b->df) return a->df > b->df;
        break;
      case RankMethod::tfidf_low:
        if (a->tfidf != b->tfidf) return a->tfidf < b->tfidf;
        break;
      case RankMethod::entropy:
        if (a->entropy_norm != b->entropy_norm) return a->entropy_norm > b->entropy_norm;
        break;
    }
    if (a->tf_total != b->tf_total) return a->tf_total > b->tf_total;
    return a->word < b->word;
  };
  std::sort(pool.begin(), pool.end(), key_less);
  if (pool.size() > top_k) pool.resize(top_k);

  StopwordList list;
  list.language = std::move(language);
  list.source = "stat:" + std::string(to_string(method));
  list.normalized = true;
  for (const auto* ts : pool) list.entries.push_back(ts->word);
  std::sort(list.entries.begin(), list.entries.end());
  return list;
}

} // namespace stopkit
