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

#ifndef NEWSRANK_URL_HPP_
#define NEWSRANK_URL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace newsrank {

struct UrlParts {
  std::string scheme;    // lowercased
  std::string userinfo;  // without trailing '@'
  std::string host;      // lowercased
  std::string port;      // digits, empty if absent
  std::string path;      // starts with '/' or empty
  std::string query;     // without leading '?'
  std::string fragment;  // without leading '#'
  bool has_query = false;
  bool has_fragment = false;

  std::string serialize() const;
};

// Splits an absolute URL into parts. Returns nullopt when there is no
// scheme or the authority is malformed.
std::optional<UrlParts> parse_url(std::string_view url);

// RFC 3986 section 5 reference resolution. Returns nullopt when neither
// the reference nor the base yields an absolute URL.
std::optional<std::string> resolve_url(std::string_view base, std::string_view ref);

// Explicit url -> canonical_url overrides, loaded from a two-column TSV.
struct CanonicalMap {
  std::unordered_map<std::string, std::string> entries;

  static CanonicalMap load_tsv(const std::string& path);
};

// Tracking query parameters stripped by default during canonicalization.
const std::vector<std::string>& default_tracking_params();

// Canonical URL resolution: exact hits in `map` win verbatim; otherwise
// the URL is normalized deterministically (lowercase scheme and host,
// fragment dropped, tracking params stripped, bare "/" path removed).
// Throws ValidationError naming the string when it cannot be parsed.
std::string canonicalize_url(const std::string& url, const CanonicalMap& map,
                             const std::vector<std::string>& strip_params = default_tracking_params());

}  // namespace newsrank

#endif  // NEWSRANK_URL_HPP_
