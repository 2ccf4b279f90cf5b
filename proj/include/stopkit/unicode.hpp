#pragma once

#include <string>
#include <string_view>

namespace stopkit::uni {

// Decodes UTF-8. With strict=true a malformed sequence throws FormatError;
// otherwise each malformed byte becomes U+FFFD.
std::u32string decode_utf8(std::string_view bytes, bool strict);

std::string encode_utf8(std::u32string_view codepoints);

void append_utf8(std::string& out, char32_t cp);

// Canonical composition (NFC). Input must be valid UTF-8.
std::string nfc(std::string_view utf8);

// General category P (all subclasses).
bool is_punct(char32_t cp);

// Unicode White_Space property.
bool is_space(char32_t cp);

// General category L.
bool is_letter(char32_t cp);

// Simple (non-locale, single-codepoint) lowercase mapping.
char32_t to_lower(char32_t cp);

bool valid_utf8(std::string_view bytes);

} // namespace stopkit::uni
