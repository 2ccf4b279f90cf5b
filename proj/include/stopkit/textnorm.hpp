#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stopkit {

// How punctuation is treated when normalizing words and tokenizing text.
//
//   strip         delete punctuation in place:   "l'homme" -> "lhomme"
//   split         punctuation acts as a space:   "l'homme" -> "l homme"
//   keep_internal keep apostrophes and hyphens flanked by letters,
//                 split on everything else:      "l'homme" -> "l'homme"
//
// Punctuation means Unicode general category P; digits and letters never
// count as punctuation.
enum class PunctMode { strip, split, keep_internal };

struct NormPolicy {
  PunctMode punct = PunctMode::split;
  bool lowercase = true;
};

// Canonical composition (NFC), then simple lowercasing when enabled, then
// the punctuation transform. Under split mode the result may contain
// internal single spaces ("l'homme" -> "l homme"); an all-punctuation word
// normalizes to the empty string.
std::string normalize_word(std::string_view word, const NormPolicy& policy);

// Splits text on Unicode whitespace and applies the punctuation policy.
// Tokens are non-empty, whitespace-free, and under strip/split modes
// punctuation-free. Malformed UTF-8 bytes are read as U+FFFD.
std::vector<std::string> tokenize(std::string_view text, const NormPolicy& policy);

PunctMode parse_punct_mode(std::string_view name); // "strip"|"split"|"keep-internal"
std::string_view to_string(PunctMode mode);

} // namespace stopkit
