/*
 * Copyright 2026 The newsrank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <newsrank/text.hpp>

#include <cstdint>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace newsrank {
namespace {

// Characters stripped to spaces: Unicode general categories P* and S*.
bool is_punctuation_or_symbol(UChar32 c) {
  switch (u_charType(c)) {
    case U_DASH_PUNCTUATION:
    case U_START_PUNCTUATION:
    case U_END_PUNCTUATION:
    case U_CONNECTOR_PUNCTUATION:
    case U_OTHER_PUNCTUATION:
    case U_INITIAL_PUNCTUATION:
    case U_FINAL_PUNCTUATION:
    case U_MATH_SYMBOL:
    case U_CURRENCY_SYMBOL:
    case U_MODIFIER_SYMBOL:
    case U_OTHER_SYMBOL:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string normalize_title(std::string_view title) {
  std::string out;
  out.reserve(title.size());
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(title.data());
  const auto length = static_cast<std::int32_t>(title.size());
  std::int32_t i = 0;
  bool pending_space = false;
  while (i < length) {
    const std::int32_t start = i;
    UChar32 c = 0;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
      // Invalid UTF-8: carry the raw bytes through unchanged so arbitrary
      // input stays total and re-normalization is a no-op.
      if (pending_space && !out.empty()) out += ' ';
      pending_space = false;
      out.append(title.substr(start, i - start));
      continue;
    }
    if (u_isUWhiteSpace(c) || is_punctuation_or_symbol(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out += ' ';
    pending_space = false;
    char buffer[U8_MAX_LENGTH];
    std::int32_t written = 0;
    U8_APPEND_UNSAFE(buffer, written, u_tolower(c));
    out.append(buffer, written);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view normalized) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start < normalized.size()) {
    std::size_t end = normalized.find(' ', start);
    if (end == std::string_view::npos) end = normalized.size();
    if (end > start) tokens.emplace_back(normalized.substr(start, end - start));
    start = end + 1;
  }
  return tokens;
}

}  // namespace newsrank
