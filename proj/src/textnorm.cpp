#include "stopkit/textnorm.hpp"

#include "stopkit/unicode.hpp"

#include <stdexcept>

namespace stopkit {

namespace {

// Joiners preserved under keep_internal when flanked by letters.
bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == U'’'; }
bool is_hyphen(char32_t cp) { return cp == U'-' || cp == U'‐'; }

bool keepable_joiner(const std::u32string& cps, size_t i) {
  if (!is_apostrophe(cps[i]) && !is_hyphen(cps[i])) return false;
  if (i == 0 || i + 1 >= cps.size()) return false;
  return uni::is_letter(cps[i - 1]) && uni::is_letter(cps[i + 1]);
}

// NFC, then per-codepoint simple lowercase. Malformed input bytes are
// replaced rather than rejected so these functions never fail.
std::u32string canonical_codepoints(std::string_view text, bool lowercase) {
  std::string sane = uni::encode_utf8(uni::decode_utf8(text, /*strict=*/false));
  std::u32string cps = uni::decode_utf8(uni::nfc(sane), /*strict=*/true);
  if (lowercase) {
    for (auto& cp : cps) cp = uni::to_lower(cp);
  }
  return cps;
}

} // namespace

std::string normalize_word(std::string_view word, const NormPolicy& policy) {
  const std::u32string cps = canonical_codepoints(word, policy.lowercase);

  std::u32string kept;
  kept.reserve(cps.size());
  for (size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (uni::is_punct(cp)) {
      switch (policy.punct) {
        case PunctMode::strip:
          break; // drop, no boundary
        case PunctMode::split:
          kept.push_back(U' ');
          break;
        case PunctMode::keep_internal:
          if (keepable_joiner(cps, i)) {
            kept.push_back(cp);
          } else {
            kept.push_back(U' ');
          }
          break;
      }
    } else {
      kept.push_back(cp);
    }
  }

  // Collapse whitespace runs and trim so the result is stable under
  // renormalization.
  std::u32string out;
  out.reserve(kept.size());
  bool pending_space = false;
  for (char32_t cp : kept) {
    if (uni::is_space(cp)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(U' ');
      pending_space = false;
      out.push_back(cp);
    }
  }
  return uni::encode_utf8(out);
}

std::vector<std::string> tokenize(std::string_view text, const NormPolicy& policy) {
  const std::u32string cps = canonical_codepoints(text, policy.lowercase);

  std::vector<std::string> tokens;
  std::u32string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(uni::encode_utf8(current));
      current.clear();
    }
  };

  for (size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (uni::is_space(cp)) {
      flush();
      continue;
    }
    if (uni::is_punct(cp)) {
      switch (policy.punct) {
        case PunctMode::strip:
          break; // deleted in place, token continues across it
        case PunctMode::split:
          flush();
          break;
        case PunctMode::keep_internal:
          if (keepable_joiner(cps, i)) {
            current.push_back(cp);
          } else {
            flush();
          }
          break;
      }
      continue;
    }
    current.push_back(cp);
  }
  flush();
  return tokens;
}

PunctMode parse_punct_mode(std::string_view name) {
  if (name == "strip") return PunctMode::strip;
  if (name == "split") return PunctMode::split;
  if (name == "keep-internal" || name == "keep_internal") return PunctMode::keep_internal;
  throw std::invalid_argument("unknown punctuation mode: " + std::string(name));
}

std::string_view to_string(PunctMode mode) {
  switch (mode) {
    case PunctMode::strip: return "strip";
    case PunctMode::split: return "split";
    case PunctMode::keep_internal: return "keep-internal";
  }
  return "split";
}

} // namespace stopkit
