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

#include <newsrank/url.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include <newsrank/error.hpp>

namespace newsrank {
namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_scheme_char(char c) {
  return is_alpha(c) || is_digit(c) || c == '+' || c == '-' || c == '.';
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Relative-reference decomposition per RFC 3986 section 4.2: any of the
// five components may be absent, and absence is distinct from emptiness.
struct RefParts {
  bool has_scheme = false;
  bool has_authority = false;
  bool has_query = false;
  bool has_fragment = false;
  std::string scheme;
  std::string authority;
  std::string path;
  std::string query;
  std::string fragment;
};

RefParts split_ref(std::string_view url) {
  RefParts parts;
  std::string_view rest = url;

  const std::size_t colon = rest.find(':');
  if (colon != std::string_view::npos && colon > 0 && is_alpha(rest[0])) {
    bool scheme_ok = true;
    for (std::size_t i = 1; i < colon; ++i) {
      if (!is_scheme_char(rest[i])) {
        scheme_ok = false;
        break;
      }
    }
    // Characters ordered before ':' in a path segment (like '/') mean the
    // colon belongs to the path, not a scheme.
    if (scheme_ok && rest.substr(0, colon).find('/') == std::string_view::npos) {
      parts.has_scheme = true;
      parts.scheme = std::string(rest.substr(0, colon));
      rest.remove_prefix(colon + 1);
    }
  }

  if (rest.size() >= 2 && rest[0] == '/' && rest[1] == '/') {
    rest.remove_prefix(2);
    const std::size_t end = rest.find_first_of("/?#");
    parts.has_authority = true;
    parts.authority = std::string(rest.substr(0, end));
    rest = end == std::string_view::npos ? std::string_view() : rest.substr(end);
  }

  const std::size_t hash = rest.find('#');
  if (hash != std::string_view::npos) {
    parts.has_fragment = true;
    parts.fragment = std::string(rest.substr(hash + 1));
    rest = rest.substr(0, hash);
  }
  const std::size_t question = rest.find('?');
  if (question != std::string_view::npos) {
    parts.has_query = true;
    parts.query = std::string(rest.substr(question + 1));
    rest = rest.substr(0, question);
  }
  parts.path = std::string(rest);
  return parts;
}

// RFC 3986 section 5.2.4.
std::string remove_dot_segments(std::string path) {
  std::string output;
  while (!path.empty()) {
    if (path.rfind("../", 0) == 0) {
      path.erase(0, 3);
    } else if (path.rfind("./", 0) == 0) {
      path.erase(0, 2);
    } else if (path.rfind("/./", 0) == 0) {
      path.replace(0, 3, "/");
    } else if (path == "/.") {
      path = "/";
    } else if (path.rfind("/../", 0) == 0 || path == "/..") {
      path = path == "/.." ? "/" : "/" + path.substr(4);
      const std::size_t slash = output.find_last_of('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (path == "." || path == "..") {
      path.clear();
    } else {
      std::size_t end = path.find('/', path[0] == '/' ? 1 : 0);
      if (end == std::string::npos) end = path.size();
      output.append(path, 0, end);
      path.erase(0, end);
    }
  }
  return output;
}

// RFC 3986 section 5.3, on decomposed parts.
std::string recompose(const RefParts& parts) {
  std::string out;
  if (parts.has_scheme) {
    out += parts.scheme;
    out += ':';
  }
  if (parts.has_authority) {
    out += "//";
    out += parts.authority;
  }
  out += parts.path;
  if (parts.has_query) {
    out += '?';
    out += parts.query;
  }
  if (parts.has_fragment) {
    out += '#';
    out += parts.fragment;
  }
  return out;
}

// RFC 3986 section 5.3 "merge".
std::string merge_paths(const RefParts& base, const std::string& ref_path) {
  if (base.has_authority && base.path.empty()) return "/" + ref_path;
  const std::size_t slash = base.path.find_last_of('/');
  if (slash == std::string::npos) return ref_path;
  return base.path.substr(0, slash + 1) + ref_path;
}

}  // namespace

std::string UrlParts::serialize() const {
  std::string out = scheme;
  out += "://";
  if (!userinfo.empty()) {
    out += userinfo;
    out += '@';
  }
  out += host;
  if (!port.empty()) {
    out += ':';
    out += port;
  }
  out += path;
  if (has_query) {
    out += '?';
    out += query;
  }
  if (has_fragment) {
    out += '#';
    out += fragment;
  }
  return out;
}

std::optional<UrlParts> parse_url(std::string_view url) {
  const RefParts ref = split_ref(url);
  if (!ref.has_scheme || !ref.has_authority) return std::nullopt;

  UrlParts parts;
  parts.scheme = ascii_lower(ref.scheme);
  parts.path = ref.path;
  parts.query = ref.query;
  parts.fragment = ref.fragment;
  parts.has_query = ref.has_query;
  parts.has_fragment = ref.has_fragment;

  std::string_view authority = ref.authority;
  const std::size_t at = authority.find('@');
  if (at != std::string_view::npos) {
    parts.userinfo = std::string(authority.substr(0, at));
    authority.remove_prefix(at + 1);
  }
  // The port is the digit run after the final ':' outside any IPv6
  // bracket pair.
  const std::size_t bracket = authority.rfind(']');
  const std::size_t colon = authority.rfind(':');
  if (colon != std::string_view::npos &&
      (bracket == std::string_view::npos || colon > bracket)) {
    std::string_view port = authority.substr(colon + 1);
    if (!std::all_of(port.begin(), port.end(), is_digit)) return std::nullopt;
    parts.port = std::string(port);
    authority = authority.substr(0, colon);
  }
  parts.host = ascii_lower(authority);
  if (parts.host.empty()) return std::nullopt;
  return parts;
}

std::optional<std::string> resolve_url(std::string_view base, std::string_view ref) {
  const RefParts b = split_ref(base);
  if (!b.has_scheme) return std::nullopt;
  const RefParts r = split_ref(ref);

  RefParts target;
  target.has_scheme = true;
  if (r.has_scheme) {
    target.scheme = r.scheme;
    target.has_authority = r.has_authority;
    target.authority = r.authority;
    target.path = remove_dot_segments(r.path);
    target.has_query = r.has_query;
    target.query = r.query;
  } else {
    target.scheme = b.scheme;
    if (r.has_authority) {
      target.has_authority = true;
      target.authority = r.authority;
      target.path = remove_dot_segments(r.path);
      target.has_query = r.has_query;
      target.query = r.query;
    } else {
      target.has_authority = b.has_authority;
      target.authority = b.authority;
      if (r.path.empty()) {
        target.path = b.path;
        target.has_query = r.has_query || b.has_query;
        target.query = r.has_query ? r.query : b.query;
      } else {
        target.path = remove_dot_segments(r.path[0] == '/' ? r.path : merge_paths(b, r.path));
        target.has_query = r.has_query;
        target.query = r.query;
      }
    }
  }
  target.has_fragment = r.has_fragment;
  target.fragment = r.fragment;
  return recompose(target);
}

const std::vector<std::string>& default_tracking_params() {
  static const std::vector<std::string> kParams = {"utm_source", "utm_medium", "utm_campaign",
                                                   "fbclid"};
  return kParams;
}

CanonicalMap CanonicalMap::load_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open canonical map: " + path);
  CanonicalMap map;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw ValidationError("canonical map " + path + " line " + std::to_string(lineno) +
                            ": expected exactly `url<TAB>canonical_url`");
    }
    map.entries[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return map;
}

std::string canonicalize_url(const std::string& url, const CanonicalMap& canonical_map,
                             const std::vector<std::string>& strip_params) {
  const auto mapped = canonical_map.entries.find(url);
  if (mapped != canonical_map.entries.end()) return mapped->second;

  std::optional<UrlParts> parts = parse_url(url);
  if (!parts) throw ValidationError("invalid URL \"" + url + "\"");

  parts->fragment.clear();
  parts->has_fragment = false;

  if (parts->has_query) {
    std::string kept;
    std::size_t start = 0;
    const std::string& query = parts->query;
    while (start <= query.size()) {
      std::size_t end = query.find('&', start);
      if (end == std::string::npos) end = query.size();
      const std::string param = query.substr(start, end - start);
      const std::string name = param.substr(0, param.find('='));
      if (std::find(strip_params.begin(), strip_params.end(), name) == strip_params.end()) {
        if (!kept.empty()) kept += '&';
        kept += param;
      }
      if (end == query.size()) break;
      start = end + 1;
    }
    parts->query = kept;
    if (kept.empty()) parts->has_query = false;
  }

  if (parts->path == "/") parts->path.clear();
  return parts->serialize();
}

}  // namespace newsrank
