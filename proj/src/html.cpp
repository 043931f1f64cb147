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

#include <newsrank/html.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <unordered_set>

#include <unicode/utf8.h>

#include <newsrank/url.hpp>

namespace newsrank {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

bool starts_with_ci(std::string_view s, std::size_t at, std::string_view word) {
  if (at + word.size() > s.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (lower(s[at + i]) != word[i]) return false;
  }
  return true;
}

// True when the tag name at `at` ends there (next char closes or
// separates), so "<a>" matches but "<abbr>" does not.
bool name_boundary(std::string_view s, std::size_t at) {
  return at >= s.size() || is_space(s[at]) || s[at] == '>' || s[at] == '/';
}

// Decodes the handful of entity forms that appear in href values; anything
// unrecognized is kept verbatim.
std::string decode_entities(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  std::size_t i = 0;
  while (i < value.size()) {
    if (value[i] != '&') {
      out += value[i++];
      continue;
    }
    const std::size_t semi = value.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 32) {
      out += value[i++];
      continue;
    }
    const std::string_view name = value.substr(i + 1, semi - i - 1);
    if (name == "amp") {
      out += '&';
    } else if (name == "lt") {
      out += '<';
    } else if (name == "gt") {
      out += '>';
    } else if (name == "quot") {
      out += '"';
    } else if (name == "apos") {
      out += '\'';
    } else if (name.size() > 1 && name[0] == '#') {
      const bool hex = name[1] == 'x' || name[1] == 'X';
      std::uint32_t code = 0;
      bool ok = name.size() > (hex ? 2u : 1u);
      for (std::size_t j = hex ? 2 : 1; ok && j < name.size(); ++j) {
        const char c = lower(name[j]);
        int digit;
        if (c >= '0' && c <= '9') {
          digit = c - '0';
        } else if (hex && c >= 'a' && c <= 'f') {
          digit = c - 'a' + 10;
        } else {
          ok = false;
          break;
        }
        code = code * (hex ? 16 : 10) + static_cast<std::uint32_t>(digit);
        if (code > 0x10FFFF) ok = false;
      }
      if (!ok) {
        out += value[i++];
        continue;
      }
      char buffer[U8_MAX_LENGTH];
      std::int32_t written = 0;
      U8_APPEND_UNSAFE(buffer, written, static_cast<UChar32>(code));
      out.append(buffer, written);
    } else {
      out += value[i++];
      continue;
    }
    i = semi + 1;
  }
  return out;
}

// Parses the attribute list of one tag starting just past the tag name and
// returns the position after the closing '>'. When `href` is non-null and
// an href attribute is present, its raw value is stored there. A tag the
// input truncates before its '>' is discarded whole, so an unterminated
// attribute value never produces a link.
std::size_t scan_attributes(std::string_view html, std::size_t pos, std::string* href,
                            bool* found) {
  std::string first_href;
  bool has_href = false;
  while (pos < html.size() && html[pos] != '>') {
    if (is_space(html[pos]) || html[pos] == '/') {
      ++pos;
      continue;
    }
    const std::size_t name_start = pos;
    while (pos < html.size() && !is_space(html[pos]) && html[pos] != '=' && html[pos] != '>' &&
           html[pos] != '/') {
      ++pos;
    }
    std::string name;
    for (std::size_t i = name_start; i < pos; ++i) name += lower(html[i]);
    while (pos < html.size() && is_space(html[pos])) ++pos;
    std::string value;
    bool has_value = false;
    if (pos < html.size() && html[pos] == '=') {
      ++pos;
      while (pos < html.size() && is_space(html[pos])) ++pos;
      if (pos < html.size() && (html[pos] == '"' || html[pos] == '\'')) {
        const char quote = html[pos++];
        const std::size_t end = html.find(quote, pos);
        if (end == std::string_view::npos) return html.size();
        value = std::string(html.substr(pos, end - pos));
        pos = end + 1;
      } else {
        const std::size_t start = pos;
        while (pos < html.size() && !is_space(html[pos]) && html[pos] != '>') ++pos;
        value = std::string(html.substr(start, pos - start));
      }
      has_value = true;
    }
    if (has_value && name == "href" && !has_href) {
      first_href = value;
      has_href = true;
    }
  }
  if (pos >= html.size()) return pos;
  if (href != nullptr && has_href) {
    *href = first_href;
    *found = true;
  }
  return pos + 1;
}

// Skips past the matching close tag of a raw-text element.
std::size_t skip_raw_text(std::string_view html, std::size_t pos, std::string_view close) {
  while (pos < html.size()) {
    if (html[pos] == '<' && starts_with_ci(html, pos, close)) {
      const std::size_t end = html.find('>', pos);
      return end == std::string_view::npos ? html.size() : end + 1;
    }
    ++pos;
  }
  return pos;
}

}  // namespace

std::vector<std::string> extract_links(std::string_view html, const std::string& base_url) {
  std::vector<std::string> links;
  std::unordered_set<std::string> seen;
  std::size_t pos = 0;
  while (pos < html.size()) {
    pos = html.find('<', pos);
    if (pos == std::string_view::npos) break;
    if (starts_with_ci(html, pos, "<!--")) {
      const std::size_t end = html.find("-->", pos + 4);
      pos = end == std::string_view::npos ? html.size() : end + 3;
      continue;
    }
    if (starts_with_ci(html, pos, "<script") && name_boundary(html, pos + 7)) {
      pos = skip_raw_text(html, scan_attributes(html, pos + 7, nullptr, nullptr), "</script");
      continue;
    }
    if (starts_with_ci(html, pos, "<style") && name_boundary(html, pos + 6)) {
      pos = skip_raw_text(html, scan_attributes(html, pos + 6, nullptr, nullptr), "</style");
      continue;
    }
    if (starts_with_ci(html, pos, "<a") && name_boundary(html, pos + 2)) {
      std::string href;
      bool found = false;
      pos = scan_attributes(html, pos + 2, &href, &found);
      if (!found) continue;
      const std::string decoded = decode_entities(href);
      const std::optional<std::string> resolved = resolve_url(base_url, decoded);
      if (!resolved) continue;
      const std::optional<UrlParts> parts = parse_url(*resolved);
      if (!parts) continue;
      std::string scheme;
      for (const char c : parts->scheme) scheme += lower(c);
      if (scheme != "http" && scheme != "https") continue;
      if (seen.insert(*resolved).second) links.push_back(*resolved);
      continue;
    }
    if (starts_with_ci(html, pos, "</") || pos + 1 >= html.size() ||
        std::isalpha(static_cast<unsigned char>(html[pos + 1])) != 0 || html[pos + 1] == '!' ||
        html[pos + 1] == '?') {
      // Any other markup: skip its attribute list so quoted '>' characters
      // do not end the tag early.
      const std::size_t name_end = html.find_first_of(" \t\n\r\f>/", pos + 1);
      pos = scan_attributes(html, name_end == std::string_view::npos ? html.size() : name_end,
                            nullptr, nullptr);
      continue;
    }
    ++pos;
  }
  return links;
}

}  // namespace newsrank
