#include "stopkit/lists.hpp"

#include "stopkit/errors.hpp"

#include <algorithm>
#include <set>

namespace stopkit {

namespace {

void require_normalized(const StopwordList& list, const char* op) {
  if (!list.normalized) {
    throw SemanticError(std::string(op) + ": list '" + list.source + "' is not normalized");
  }
}

void require_same_language(const StopwordList& a, const StopwordList& b, const char* op) {
  if (a.language != b.language) {
    throw SemanticError(std::string(op) + ": language mismatch between '" + a.source + "' (" +
                        a.language + ") and '" + b.source + "' (" + b.language + ")");
  }
}

} // namespace

StopwordList normalize_list(const StopwordList& list, const NormPolicy& policy) {
  std::set<std::string> entries;
  for (const auto& entry : list.entries) {
    std::string norm = normalize_word(entry, policy);
    if (!norm.empty()) entries.insert(std::move(norm));
  }
  StopwordList out;
  out.language = list.language;
  out.source = list.source;
  out.normalized = true;
  out.entries.assign(entries.begin(), entries.end());
  return out;
}

StopwordList merge_lists(const std::vector<StopwordList>& lists) {
  if (lists.empty()) throw SemanticError("merge: no input lists");

  std::set<std::string> entries;
  for (const auto& list : lists) {
    require_normalized(list, "merge");
    require_same_language(lists.front(), list, "merge");
    entries.insert(list.entries.begin(), list.entries.end());
  }

  StopwordList out;
  out.language = lists.front().language;
  out.source = "merged";
  out.normalized = true;
  out.entries.assign(entries.begin(), entries.end());
  return out;
}

ListDiff diff_lists(const StopwordList& a, const StopwordList& b) {
  require_normalized(a, "diff");
  require_normalized(b, "diff");
  require_same_language(a, b, "diff");

  ListDiff diff;
  diff.only_a = StopwordList{a.language, a.source + "-only", true, {}};
  diff.only_b = StopwordList{b.language, b.source + "-only", true, {}};
  diff.both = StopwordList{a.language, "both", true, {}};

  std::set_difference(a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
                      std::back_inserter(diff.only_a.entries));
  std::set_difference(b.entries.begin(), b.entries.end(), a.entries.begin(), a.entries.end(),
                      std::back_inserter(diff.only_b.entries));
  std::set_intersection(a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
                        std::back_inserter(diff.both.entries));
  return diff;
}

} // namespace stopkit
