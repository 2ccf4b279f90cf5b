#pragma once

#include "stopkit/upos.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace stopkit {

struct PosToken {
  std::string form; // surface form, never empty
  UposTag upos = UposTag::X;
};

using PosSentence = std::vector<PosToken>;

// Sentences of (form, UPOS) pairs parsed from CoNLL-U. Sentences are
// non-empty and appear in input order.
struct PosCorpus {
  std::string language; // ISO-639 code
  std::vector<PosSentence> sentences;

  size_t token_count() const {
    size_t n = 0;
    for (const auto& s : sentences) n += s.size();
    return n;
  }
};

struct Document {
  std::string id;
  std::string category; // never empty
  std::string text;     // may be empty
};

// Labeled documents in input order. Categories are derived from the docs.
struct CategorizedCorpus {
  std::string language;
  std::vector<Document> docs;

  std::vector<std::string> categories() const;
};

// A language- and source-tagged stopword list. Until normalize_list has
// run, entries are verbatim file lines in input order and may repeat;
// afterwards they are unique and codepoint-lexicographically sorted.
struct StopwordList {
  std::string language;
  std::string source; // provenance: "masakhapos", "asp", "merged", "stat:freq", ...
  bool normalized = false;
  std::vector<std::string> entries;

  size_t size() const { return entries.size(); }
  bool contains(const std::string& word) const;
};

} // namespace stopkit
