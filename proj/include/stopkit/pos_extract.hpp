#pragma once

#include "stopkit/corpus.hpp"
#include "stopkit/textnorm.hpp"

#include <string>

namespace stopkit {

// Harvests the normalized surface forms of every token whose UPOS tag is
// in the tag set. The result is deduplicated, canonically ordered and
// shares the normalization policy with the news tokenizer so list entries
// and corpus tokens live in the same space. Zero matches yield an empty
// list, not an error.
StopwordList extract_pos_stopwords(const PosCorpus& corpus, const TagSet& tags,
                                   const NormPolicy& policy,
                                   std::string source = "masakhapos");

} // namespace stopkit
