#include "stopkit/pos_extract.hpp"

#include <set>

namespace stopkit {

StopwordList extract_pos_stopwords(const PosCorpus& corpus, const TagSet& tags,
                                   const NormPolicy& policy, std::string source) {
  std::set<std::string> entries;
  for (const auto& sentence : corpus.sentences) {
    for (const auto& token : sentence) {
      if (!tags.contains(token.upos)) continue;
      std::string norm = normalize_word(token.form, policy);
      if (!norm.empty()) entries.insert(std::move(norm));
    }
  }

  StopwordList list;
  list.language = corpus.language;
  list.source = std::move(source);
  list.normalized = true;
  list.entries.assign(entries.begin(), entries.end());
  return list;
}

} // namespace stopkit
