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

#include <newsrank/citation.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <utility>

#include <newsrank/error.hpp>

namespace newsrank {

std::int64_t CitationGraph::edge_count() const {
  std::int64_t total = 0;
  for (const auto& targets : out_edges) total += static_cast<std::int64_t>(targets.size());
  return total;
}

CitationGraph build_graph(const CorpusSnapshot& corpus, const GraphBuildOptions& options) {
  const int n = static_cast<int>(corpus.articles.size());

  // Canonical URL -> article index; first occurrence wins on collisions.
  std::unordered_map<std::string, int> by_canonical;
  by_canonical.reserve(corpus.articles.size());
  for (int i = 0; i < n; ++i) {
    by_canonical.emplace(corpus.articles[i].canonical_url, i);
  }

  CitationGraph graph;
  std::vector<std::pair<int, int>> edges;  // (citing, cited) article indices
  std::vector<bool> participates(n, false);
  std::unordered_set<std::int64_t> seen_pairs;
  for (int v = 0; v < n; ++v) {
    const Article& citing = corpus.articles[v];
    for (const std::string& link : citing.links) {
      const auto it = by_canonical.find(link);
      if (it == by_canonical.end()) {
        ++graph.dropped_external;
        continue;
      }
      const int u = it->second;
      if (u == v) {
        ++graph.dropped_self;
        continue;
      }
      const Article& cited = corpus.articles[u];
      if (citing.publisher == cited.publisher) {
        ++graph.dropped_same_publisher;
        continue;
      }
      if (options.blocked_publishers.count(citing.publisher) != 0 ||
          options.blocked_publishers.count(cited.publisher) != 0) {
        ++graph.dropped_blocked;
        continue;
      }
      if (!seen_pairs.insert(static_cast<std::int64_t>(v) * n + u).second) {
        ++graph.dropped_duplicate;
        continue;
      }
      edges.emplace_back(v, u);
      participates[v] = true;
      participates[u] = true;
    }
  }

  // Vertices keep corpus order; isolated articles are excluded.
  std::vector<int> vertex_of(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!participates[i]) {
      ++graph.excluded_isolated;
      continue;
    }
    vertex_of[i] = graph.vertex_count();
    const Article& article = corpus.articles[i];
    graph.ids.push_back(article.id);
    graph.publishers.push_back(article.publisher);
    graph.published_at.push_back(article.published_at);
    graph.id_index.emplace(article.id, vertex_of[i]);
  }

  graph.out_edges.resize(graph.ids.size());
  graph.in_edges.resize(graph.ids.size());
  for (const auto& [v, u] : edges) {
    graph.out_edges[vertex_of[v]].push_back(vertex_of[u]);
    graph.in_edges[vertex_of[u]].push_back(vertex_of[v]);
  }
  for (auto& targets : graph.out_edges) std::sort(targets.begin(), targets.end());
  for (auto& sources : graph.in_edges) std::sort(sources.begin(), sources.end());
  return graph;
}

GraphStats graph_stats(const CitationGraph& graph) {
  GraphStats stats;
  stats.vertices = graph.vertex_count();
  stats.edges = graph.edge_count();
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (graph.out_edges[v].empty()) ++stats.dangling;
    ++stats.in_degree_histogram[static_cast<int>(graph.in_edges[v].size())];
    ++stats.out_degree_histogram[static_cast<int>(graph.out_edges[v].size())];
  }
  stats.dropped_self = graph.dropped_self;
  stats.dropped_same_publisher = graph.dropped_same_publisher;
  stats.dropped_external = graph.dropped_external;
  stats.dropped_duplicate = graph.dropped_duplicate;
  stats.dropped_blocked = graph.dropped_blocked;
  stats.excluded_isolated = graph.excluded_isolated;
  return stats;
}

void write_edges_tsv(const CitationGraph& graph, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write edge list: " + path);
  for (int v = 0; v < graph.vertex_count(); ++v) {
    for (const int u : graph.out_edges[v]) {
      out << graph.ids[v] << '\t' << graph.ids[u] << '\n';
    }
  }
  if (!out) throw IoError("error while writing edge list: " + path);
}

CitationGraph load_edges_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list: " + path);
  CitationGraph graph;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  std::size_t lineno = 0;

  const auto intern = [&graph](const std::string& id) {
    const auto [it, inserted] = graph.id_index.emplace(id, graph.vertex_count());
    if (inserted) {
      graph.ids.push_back(id);
      graph.publishers.emplace_back();
      graph.published_at.push_back(0);
    }
    return it->second;
  };

  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw ValidationError("edge list " + path + " line " + std::to_string(lineno) +
                            ": expected `citing_id<TAB>cited_id`");
    }
    const int v = intern(line.substr(0, tab));
    const int u = intern(line.substr(tab + 1));
    if (v == u) {
      ++graph.dropped_self;
      continue;
    }
    if (!seen.emplace(v, u).second) {
      ++graph.dropped_duplicate;
      continue;
    }
    edges.emplace_back(v, u);
  }

  graph.out_edges.resize(graph.ids.size());
  graph.in_edges.resize(graph.ids.size());
  for (const auto& [v, u] : edges) {
    graph.out_edges[v].push_back(u);
    graph.in_edges[u].push_back(v);
  }
  for (auto& targets : graph.out_edges) std::sort(targets.begin(), targets.end());
  for (auto& sources : graph.in_edges) std::sort(sources.begin(), sources.end());
  return graph;
}

std::unordered_set<std::string> load_blocklist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open blocklist: " + path);
  std::unordered_set<std::string> blocked;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    blocked.insert(line);
  }
  return blocked;
}

}  // namespace newsrank
