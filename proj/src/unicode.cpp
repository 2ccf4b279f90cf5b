#include "stopkit/unicode.hpp"

#include "stopkit/errors.hpp"

#include <unicode/uchar.h>
#include <unicode/unorm2.h>
#include <unicode/ustring.h>
#include <unicode/utf8.h>

#include <vector>

namespace stopkit::uni {

namespace {
constexpr char32_t kReplacement = 0xFFFD;
}

std::u32string decode_utf8(std::string_view bytes, bool strict) {
  std::u32string out;
  out.reserve(bytes.size());
  const auto* s = reinterpret_cast<const uint8_t*>(bytes.data());
  int32_t i = 0;
  const auto len = static_cast<int32_t>(bytes.size());
  while (i < len) {
    UChar32 c;
    const int32_t at = i;
    U8_NEXT(s, i, len, c);
    if (c < 0) {
      if (strict) {
        throw FormatError("invalid UTF-8 byte sequence at offset " + std::to_string(at));
      }
      out.push_back(kReplacement);
    } else {
      out.push_back(static_cast<char32_t>(c));
    }
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool err = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(cp), err);
  if (err) {
    // Unpaired surrogate or out-of-range scalar; substitute.
    n = 0;
    err = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(kReplacement), err);
  }
  out.append(reinterpret_cast<const char*>(buf), static_cast<size_t>(n));
}

std::string encode_utf8(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size() * 2);
  for (char32_t cp : codepoints) {
    append_utf8(out, cp);
  }
  return out;
}

bool valid_utf8(std::string_view bytes) {
  const auto* s = reinterpret_cast<const uint8_t*>(bytes.data());
  int32_t i = 0;
  const auto len = static_cast<int32_t>(bytes.size());
  while (i < len) {
    UChar32 c;
    U8_NEXT(s, i, len, c);
    if (c < 0) return false;
  }
  return true;
}

std::string nfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const UNormalizer2* norm = unorm2_getNFCInstance(&status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }

  // UTF-8 -> UTF-16
  std::vector<UChar> u16(utf8.size() + 1);
  int32_t u16len = 0;
  status = U_ZERO_ERROR;
  u_strFromUTF8(u16.data(), static_cast<int32_t>(u16.size()), &u16len,
                utf8.data(), static_cast<int32_t>(utf8.size()), &status);
  if (U_FAILURE(status)) {
    throw FormatError("invalid UTF-8 input to normalization");
  }

  std::vector<UChar> out(static_cast<size_t>(u16len) * 3 + 16);
  status = U_ZERO_ERROR;
  int32_t outlen = unorm2_normalize(norm, u16.data(), u16len,
                                    out.data(), static_cast<int32_t>(out.size()), &status);
  if (status == U_BUFFER_OVERFLOW_ERROR) {
    out.resize(static_cast<size_t>(outlen) + 1);
    status = U_ZERO_ERROR;
    outlen = unorm2_normalize(norm, u16.data(), u16len,
                              out.data(), static_cast<int32_t>(out.size()), &status);
  }
  if (U_FAILURE(status)) {
    throw std::runtime_error("ICU NFC normalization failed");
  }

  // UTF-16 -> UTF-8
  std::string result(static_cast<size_t>(outlen) * 3 + 16, '\0');
  int32_t u8len = 0;
  status = U_ZERO_ERROR;
  u_strToUTF8(result.data(), static_cast<int32_t>(result.size()), &u8len,
              out.data(), outlen, &status);
  if (status == U_BUFFER_OVERFLOW_ERROR) {
    result.resize(static_cast<size_t>(u8len));
    status = U_ZERO_ERROR;
    u_strToUTF8(result.data(), static_cast<int32_t>(result.size()), &u8len,
                out.data(), outlen, &status);
  }
  if (U_FAILURE(status)) {
    throw std::runtime_error("ICU UTF-8 conversion failed");
  }
  result.resize(static_cast<size_t>(u8len));
  return result;
}

bool is_punct(char32_t cp) {
  switch (u_charType(static_cast<UChar32>(cp))) {
    case U_DASH_PUNCTUATION:
    case U_START_PUNCTUATION:
    case U_END_PUNCTUATION:
    case U_CONNECTOR_PUNCTUATION:
    case U_OTHER_PUNCTUATION:
    case U_INITIAL_PUNCTUATION:
    case U_FINAL_PUNCTUATION:
      return true;
    default:
      return false;
  }
}

bool is_space(char32_t cp) {
  return u_hasBinaryProperty(static_cast<UChar32>(cp), UCHAR_WHITE_SPACE) != 0;
}

bool is_letter(char32_t cp) {
  switch (u_charType(static_cast<UChar32>(cp))) {
    case U_UPPERCASE_LETTER:
    case U_LOWERCASE_LETTER:
    case U_TITLECASE_LETTER:
    case U_MODIFIER_LETTER:
    case U_OTHER_LETTER:
      return true;
    default:
      return false;
  }
}

char32_t to_lower(char32_t cp) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

} // namespace stopkit::uni
