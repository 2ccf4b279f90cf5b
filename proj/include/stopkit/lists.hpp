#pragma once

#include "stopkit/corpus.hpp"
#include "stopkit/textnorm.hpp"

#include <vector>

namespace stopkit {

// normalize_word over every entry, empty results dropped, duplicates
// removed, codepoint-lexicographic order. Idempotent.
StopwordList normalize_list(const StopwordList& list, const NormPolicy& policy);

// Set union of normalized same-language lists; source becomes "merged".
// Mixed languages are a SemanticError naming the offending lists.
StopwordList merge_lists(const std::vector<StopwordList>& lists);

struct ListDiff {
  StopwordList only_a;
  StopwordList only_b;
  StopwordList both;
};

// Partitions a ∪ b into a-only, b-only and shared entries.
ListDiff diff_lists(const StopwordList& a, const StopwordList& b);

} // namespace stopkit
