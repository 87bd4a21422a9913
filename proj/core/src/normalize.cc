// Copyright 2026 The NND Evaluation Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nnd/normalize.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/ustring.h>
#include <unicode/utypes.h>

#include <string>

#include "nnd/error.h"

namespace nnd {
namespace {

icu::UnicodeString ToUnicode(std::string_view text) {
  // fromUTF8 substitutes U+FFFD silently, so validate first.
  UErrorCode status = U_ZERO_ERROR;
  int32_t length = 0;
  u_strFromUTF8(nullptr, 0, &length, text.data(),
                static_cast<int32_t>(text.size()), &status);
  if (status == U_INVALID_CHAR_FOUND || status == U_ILLEGAL_CHAR_FOUND) {
    throw InputError("text is not valid UTF-8");
  }
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
}

std::string ToUtf8(const icu::UnicodeString& text) {
  std::string out;
  text.toUTF8String(out);
  return out;
}

bool IsSpace(UChar32 c) { return u_isUWhiteSpace(c) || c == 0x200B; }

icu::UnicodeString CollapseWhitespace(const icu::UnicodeString& text) {
  icu::UnicodeString out;
  bool pending_space = false;
  for (int32_t i = 0; i < text.length();) {
    UChar32 c = text.char32At(i);
    i += U16_LENGTH(c);
    if (IsSpace(c)) {
      pending_space = !out.isEmpty();
      continue;
    }
    if (pending_space) out.append(static_cast<UChar>(' '));
    pending_space = false;
    out.append(c);
  }
  return out;
}

bool IsQuote(UChar32 c) {
  switch (c) {
    case '"':
    case '\'':
    case 0x2018:
    case 0x2019:
    case 0x201C:
    case 0x201D:
    case 0x00AB:
    case 0x00BB:
      return true;
    default:
      return false;
  }
}

icu::UnicodeString StripOuterQuotes(icu::UnicodeString text) {
  while (text.length() >= 2 && IsQuote(text.char32At(0)) &&
         IsQuote(text.char32At(text.length() - 1))) {
    text.remove(text.length() - 1, 1);
    text.remove(0, 1);
    text.trim();
  }
  return text;
}

icu::UnicodeString NormalizeUnicode(std::string_view text,
                                    const NormalizationConfig& config) {
  icu::UnicodeString value = ToUnicode(text);
  if (config.unicode_nfc) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) throw InputError("ICU NFC normalizer unavailable");
    value = nfc->normalize(value, status);
    if (U_FAILURE(status)) throw InputError("NFC normalization failed");
  }
  if (config.collapse_whitespace) value = CollapseWhitespace(value);
  return value;
}

}  // namespace

std::string NormalizeStored(std::string_view text,
                            const NormalizationConfig& config) {
  return ToUtf8(NormalizeUnicode(text, config));
}

std::string DedupKey(std::string_view text, const NormalizationConfig& config) {
  icu::UnicodeString value = NormalizeUnicode(text, config);
  if (config.strip_outer_quotes) value = StripOuterQuotes(value);
  if (config.lowercase_for_dedup) value.toLower(icu::Locale::getRoot());
  return ToUtf8(value);
}

}  // namespace nnd
