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

#ifndef NEWSRANK_CITATION_HPP_
#define NEWSRANK_CITATION_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <newsrank/corpus.hpp>

namespace newsrank {

// Directed citation graph over the corpus window. Only articles touched
// by at least one surviving edge become vertices; vertex order follows
// the corpus. Edges point from the citing article to the cited one.
struct CitationGraph {
  std::vector<std::string> ids;                   // vertex -> article id
  std::vector<std::string> publishers;            // vertex -> publisher
  std::vector<std::int64_t> published_at;         // vertex -> publish time
  std::unordered_map<std::string, int> id_index;  // article id -> vertex
  std::vector<std::vector<int>> out_edges;        // sorted, unique
  std::vector<std::vector<int>> in_edges;         // sorted, unique

  // Edge-drop accounting, carried into stats output.
  std::int64_t dropped_self = 0;            // citing == cited article
  std::int64_t dropped_same_publisher = 0;  // both endpoints share a publisher
  std::int64_t dropped_external = 0;        // cited URL not in the window
  std::int64_t dropped_duplicate = 0;       // repeated (citing, cited) pair
  std::int64_t dropped_blocked = 0;         // an endpoint publisher is blocklisted
  std::int64_t excluded_isolated = 0;       // articles left with no edges

  int vertex_count() const { return static_cast<int>(ids.size()); }
  std::int64_t edge_count() const;
};

struct GraphBuildOptions {
  std::unordered_set<std::string> blocked_publishers;
};

// Builds the citation graph by matching each article's outbound links
// against the corpus canonical URL index. Edge (v, u) survives iff u is
// inside the window, u != v, the publishers differ, and neither publisher
// is blocklisted; duplicates collapse to one edge. Articles with no
// surviving edge in either direction are excluded.
CitationGraph build_graph(const CorpusSnapshot& corpus, const GraphBuildOptions& options = {});

struct GraphStats {
  int vertices = 0;
  std::int64_t edges = 0;
  int dangling = 0;  // vertices with no outbound edges
  std::map<int, int> in_degree_histogram;   // degree -> vertex count
  std::map<int, int> out_degree_histogram;  // degree -> vertex count
  std::int64_t dropped_self = 0;
  std::int64_t dropped_same_publisher = 0;
  std::int64_t dropped_external = 0;
  std::int64_t dropped_duplicate = 0;
  std::int64_t dropped_blocked = 0;
  std::int64_t excluded_isolated = 0;
};

GraphStats graph_stats(const CitationGraph& graph);

// TSV (citing_id <TAB> cited_id) round-trip for snapshot directories.
// Loading reconstructs vertices in first-appearance order; drop counters
// are not serialized.
void write_edges_tsv(const CitationGraph& graph, const std::string& path);
CitationGraph load_edges_tsv(const std::string& path);

// One blocklisted publisher per line; blank lines and '#' comments skipped.
std::unordered_set<std::string> load_blocklist(const std::string& path);

}  // namespace newsrank

#endif  // NEWSRANK_CITATION_HPP_
