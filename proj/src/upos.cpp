#include "stopkit/upos.hpp"

#include <array>
#include <stdexcept>

namespace stopkit {

namespace {
constexpr std::array<std::string_view, 17> kTagNames = {
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
};
}

std::optional<UposTag> parse_upos(std::string_view text) {
  for (size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == text) return static_cast<UposTag>(i);
  }
  return std::nullopt;
}

std::string_view to_string(UposTag tag) {
  return kTagNames[static_cast<size_t>(tag)];
}

TagSet TagSet::function_words() {
  return TagSet{{UposTag::AUX, UposTag::PRON, UposTag::CCONJ,
                 UposTag::SCONJ, UposTag::DET, UposTag::PART}};
}

TagSet TagSet::parse(std::string_view csv) {
  TagSet result;
  size_t start = 0;
  while (start <= csv.size()) {
    size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view item = csv.substr(start, end - start);
    // trim ASCII whitespace
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
    if (!item.empty()) {
      auto tag = parse_upos(item);
      if (!tag) throw std::invalid_argument("unknown UPOS tag: " + std::string(item));
      result.tags.insert(*tag);
    }
    if (end == csv.size()) break;
    start = end + 1;
  }
  if (result.tags.empty()) throw std::invalid_argument("empty tag set");
  return result;
}

std::string TagSet::to_string() const {
  std::string out;
  for (UposTag tag : tags) {
    if (!out.empty()) out += ',';
    out += stopkit::to_string(tag);
  }
  return out;
}

} // namespace stopkit
