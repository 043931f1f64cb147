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

#ifndef NEWSRANK_CORPUS_HPP_
#define NEWSRANK_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <newsrank/url.hpp>

namespace newsrank {

// One news article inside a snapshot window.
struct Article {
  std::string id;
  std::string url;
  std::string canonical_url;
  std::string title;
  std::string publisher;
  std::int64_t published_at = 0;  // Unix seconds, UTC
  std::vector<std::string> links;  // canonical outbound citations, deduped
  std::string html;                // raw body if supplied; empty otherwise
};

struct CorpusSnapshot {
  std::vector<Article> articles;  // input order
  std::int64_t snapshot_time = 0;
  int window_days = 7;
};

struct RejectRecord {
  std::size_t line = 0;  // 1-based input line
  std::string reason;
};

struct LoadOptions {
  CanonicalMap canonical_map;
  std::vector<std::string> strip_params = default_tracking_params();
};

struct LoadResult {
  CorpusSnapshot corpus;
  std::vector<RejectRecord> rejects;
};

// Reads an articles JSONL file, canonicalizes every URL, populates links
// from html when links are absent, and applies the half-open window
// filter (snapshot_time - window_days, snapshot_time]. Malformed records
// land in `rejects`; an unreadable file throws IoError.
LoadResult load_corpus(const std::string& path, std::int64_t snapshot_time, int window_days,
                       const LoadOptions& options = {});

// Same validation and canonicalization for an in-memory record batch.
LoadResult load_corpus_records(const std::vector<std::string>& jsonl_lines,
                               std::int64_t snapshot_time, int window_days,
                               const LoadOptions& options = {});

}  // namespace newsrank

#endif  // NEWSRANK_CORPUS_HPP_
