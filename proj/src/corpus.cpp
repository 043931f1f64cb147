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

#include <newsrank/corpus.hpp>

#include <fstream>
#include <unordered_set>
#include <utility>

#include <json.hpp>

#include <newsrank/error.hpp>
#include <newsrank/html.hpp>
#include <newsrank/timeutil.hpp>

namespace newsrank {
namespace {

using nlohmann::json;

std::string require_string(const json& record, const char* field) {
  const auto it = record.find(field);
  if (it == record.end()) throw ValidationError(std::string("missing field \"") + field + "\"");
  if (!it->is_string()) {
    throw ValidationError(std::string("field \"") + field + "\" must be a string");
  }
  return it->get<std::string>();
}

// Parses and validates one JSONL record; throws ValidationError with the
// reject reason on any problem.
Article parse_article(const std::string& line, const LoadOptions& options) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!record.is_object()) throw ValidationError("record must be a JSON object");

  Article article;
  article.id = require_string(record, "id");
  if (article.id.empty()) throw ValidationError("field \"id\" must be non-empty");
  article.url = require_string(record, "url");
  article.title = require_string(record, "title");
  article.publisher = require_string(record, "publisher");
  if (article.publisher.empty()) throw ValidationError("field \"publisher\" must be non-empty");
  article.published_at = parse_rfc3339(require_string(record, "published_at"));

  std::string canonical_source = article.url;
  if (const auto it = record.find("canonical_url"); it != record.end()) {
    if (!it->is_string()) throw ValidationError("field \"canonical_url\" must be a string");
    canonical_source = it->get<std::string>();
  }
  article.canonical_url =
      canonicalize_url(canonical_source, options.canonical_map, options.strip_params);

  if (const auto it = record.find("html"); it != record.end()) {
    if (!it->is_string()) throw ValidationError("field \"html\" must be a string");
    article.html = it->get<std::string>();
  }

  std::vector<std::string> raw_links;
  if (const auto it = record.find("links"); it != record.end()) {
    if (!it->is_array()) throw ValidationError("field \"links\" must be an array of strings");
    for (const auto& entry : *it) {
      if (!entry.is_string()) {
        throw ValidationError("field \"links\" must be an array of strings");
      }
      raw_links.push_back(entry.get<std::string>());
    }
  } else if (!article.html.empty()) {
    raw_links = extract_links(article.html, article.url);
  }

  std::unordered_set<std::string> seen;
  for (const std::string& link : raw_links) {
    std::string canonical;
    try {
      canonical = canonicalize_url(link, options.canonical_map, options.strip_params);
    } catch (const ValidationError&) {
      continue;  // unparseable outbound link: skip, keep the record
    }
    if (seen.insert(canonical).second) article.links.push_back(std::move(canonical));
  }
  return article;
}

}  // namespace

LoadResult load_corpus_records(const std::vector<std::string>& jsonl_lines,
                               std::int64_t snapshot_time, int window_days,
                               const LoadOptions& options) {
  if (window_days <= 0) throw ValidationError("window_days must be positive");
  LoadResult result;
  result.corpus.snapshot_time = snapshot_time;
  result.corpus.window_days = window_days;
  const std::int64_t window_start =
      snapshot_time - static_cast<std::int64_t>(window_days) * 86400;

  std::unordered_set<std::string> seen_ids;
  for (std::size_t i = 0; i < jsonl_lines.size(); ++i) {
    std::string line = jsonl_lines[i];
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Article article;
    try {
      article = parse_article(line, options);
    } catch (const ValidationError& e) {
      result.rejects.push_back({i + 1, e.what()});
      continue;
    }
    // Half-open window (snapshot - window, snapshot]; out-of-window
    // records are filtered, not rejected.
    if (article.published_at <= window_start || article.published_at > snapshot_time) continue;
    if (!seen_ids.insert(article.id).second) {
      result.rejects.push_back({i + 1, "duplicate id \"" + article.id + "\""});
      continue;
    }
    result.corpus.articles.push_back(std::move(article));
  }
  return result;
}

LoadResult load_corpus(const std::string& path, std::int64_t snapshot_time, int window_days,
                       const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  if (in.bad()) throw IoError("error while reading corpus file: " + path);
  return load_corpus_records(lines, snapshot_time, window_days, options);
}

}  // namespace newsrank
