#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace stopkit {

// The 17 Universal Dependencies part-of-speech tags. X doubles as the
// placeholder for tokens annotated "_".
enum class UposTag {
  ADJ, ADP, ADV, AUX, CCONJ, DET, INTJ, NOUN, NUM,
  PART, PRON, PROPN, PUNCT, SCONJ, SYM, VERB, X,
};

std::optional<UposTag> parse_upos(std::string_view text);
std::string_view to_string(UposTag tag);

struct TagSet {
  std::set<UposTag> tags;

  // AUX, PRON, CCONJ, SCONJ, DET, PART: the function-word tags harvested
  // as stopword candidates. ADP is deliberately not included.
  static TagSet function_words();

  // Comma-separated tag names, e.g. "AUX,PRON,DET". Unknown names throw.
  static TagSet parse(std::string_view csv);

  bool contains(UposTag tag) const { return tags.count(tag) != 0; }
  bool empty() const { return tags.empty(); }
  std::string to_string() const;
};

} // namespace stopkit
