#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/ustring.h>
#include <unicode/utf16.h>
#include <unicode/utf8.h>

#include "hiwsd/errors.hpp"

namespace hiwsd {

namespace detail {

inline const icu::Normalizer2& nfc() {
  static const icu::Normalizer2* inst = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* p = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status) || p == nullptr)
      throw std::runtime_error("ICU NFC normalizer unavailable");
    return p;
  }();
  return *inst;
}

// UTF-8 -> UTF-16 with strict validation.
inline icu::UnicodeString to_utf16(std::string_view raw) {
  if (raw.empty()) return {};
  UErrorCode status = U_ZERO_ERROR;
  int32_t len16 = 0;
  u_strFromUTF8(nullptr, 0, &len16, raw.data(), static_cast<int32_t>(raw.size()),
                &status);
  if (status != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(status))
    throw DecodeError("invalid UTF-8 input");
  std::u16string buf(static_cast<std::size_t>(len16), u'\0');
  status = U_ZERO_ERROR;
  u_strFromUTF8(buf.data(), len16, nullptr, raw.data(),
                static_cast<int32_t>(raw.size()), &status);
  if (U_FAILURE(status)) throw DecodeError("invalid UTF-8 input");
  return icu::UnicodeString(buf.data(), len16);
}

inline std::string to_utf8(const icu::UnicodeString& us) {
  std::string out;
  us.toUTF8String(out);
  return out;
}

inline bool is_nfc(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  UBool ok = nfc().isNormalizedUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())), status);
  return U_SUCCESS(status) && ok;
}

}  // namespace detail

/// NFC-normalizes a UTF-8 string and trims surrounding Unicode whitespace.
/// Throws DecodeError on ill-formed UTF-8.
inline std::string normalize(std::string_view raw) {
  icu::UnicodeString us = detail::to_utf16(raw);
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString norm = detail::nfc().normalize(us, status);
  if (U_FAILURE(status)) throw DecodeError("Unicode normalization failed");
  int32_t begin = 0;
  int32_t end = norm.length();
  while (begin < end) {
    UChar32 c = norm.char32At(begin);
    if (!u_isUWhiteSpace(c)) break;
    begin += U16_LENGTH(c);
  }
  while (end > begin) {
    int32_t prev = norm.moveIndex32(end, -1);
    if (!u_isUWhiteSpace(norm.char32At(prev))) break;
    end = prev;
  }
  return detail::to_utf8(norm.tempSubStringBetween(begin, end));
}

/// One word-level unit of text: non-empty, NFC, no whitespace inside.
class Token {
 public:
  explicit Token(std::string_view raw) {
    if (raw.empty()) throw ValidationError("empty token");
    const auto* bytes = reinterpret_cast<const std::uint8_t*>(raw.data());
    const auto len = static_cast<int32_t>(raw.size());
    int32_t i = 0;
    while (i < len) {
      UChar32 c;
      U8_NEXT(bytes, i, len, c);
      if (c < 0) throw DecodeError("invalid UTF-8 in token");
      if (u_isUWhiteSpace(c))
        throw ValidationError("token contains whitespace: '" +
                              std::string(raw) + "'");
    }
    if (detail::is_nfc(raw)) {
      surface_.assign(raw);
    } else {
      UErrorCode status = U_ZERO_ERROR;
      icu::UnicodeString norm =
          detail::nfc().normalize(detail::to_utf16(raw), status);
      if (U_FAILURE(status)) throw DecodeError("Unicode normalization failed");
      surface_ = detail::to_utf8(norm);
    }
  }

  const std::string& surface() const { return surface_; }

  auto operator<=>(const Token&) const = default;

 private:
  std::string surface_;
};

using TokenSequence = std::vector<Token>;

namespace detail {

// Discarded delimiters: danda, double danda and common clause punctuation.
inline bool is_token_delimiter(UChar32 c) {
  if (u_isUWhiteSpace(c)) return true;
  switch (c) {
    case 0x0964:  // danda
    case 0x0965:  // double danda
    case '.':
    case ',':
    case ';':
    case ':':
    case '!':
    case '?':
    case '"':
    case '\'':
    case '(':
    case ')':
    case '-':
      return true;
    default:
      return false;
  }
}

}  // namespace detail

/// Splits normalized text on Unicode whitespace and the delimiter set.
/// Delimiters are discarded; digits and words become tokens.
inline TokenSequence tokenize(std::string_view text) {
  TokenSequence out;
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto len = static_cast<int32_t>(text.size());
  int32_t i = 0;
  int32_t start = 0;
  auto flush = [&](int32_t upto) {
    if (upto > start)
      out.emplace_back(text.substr(static_cast<std::size_t>(start),
                                   static_cast<std::size_t>(upto - start)));
  };
  while (i < len) {
    const int32_t at = i;
    UChar32 c;
    U8_NEXT(bytes, i, len, c);
    if (c < 0)
      throw DecodeError("invalid UTF-8 at byte " + std::to_string(at));
    if (detail::is_token_delimiter(c)) {
      flush(at);
      start = i;
    }
  }
  flush(len);
  return out;
}

/// All positions where `target` occurs, in ascending order.
inline std::vector<std::size_t> find_target(const TokenSequence& tokens,
                                            const Token& target) {
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (tokens[i] == target) hits.push_back(i);
  return hits;
}

/// Space-joins token surfaces of the half-open range [begin, end).
inline std::string join_surfaces(const TokenSequence& tokens,
                                 std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out.push_back(' ');
    out += tokens[i].surface();
  }
  return out;
}

}  // namespace hiwsd
