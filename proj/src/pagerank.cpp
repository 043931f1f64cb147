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

#include <newsrank/pagerank.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <utility>

#include <json.hpp>

#include <newsrank/error.hpp>

namespace newsrank {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// One implementation serves both entry points. Every per-vertex update
// accumulates its in-edge sum in fixed (sorted) order and the dangling
// mass and residual are reduced serially, so the parallel loops only
// change who computes each vertex, never the arithmetic: results are
// bitwise identical across thread counts.
PageRankResult run(const CitationGraph& graph, const PageRankParams& params, bool parallel) {
  if (graph.vertex_count() == 0) throw ValidationError("pagerank requires a non-empty graph");
  if (!(params.damping > 0.0 && params.damping < 1.0)) {
    throw ValidationError("damping must lie in (0, 1)");
  }
  if (!(params.tolerance > 0.0)) throw ValidationError("tolerance must be positive");
  if (params.max_iterations < 1) throw ValidationError("max_iterations must be >= 1");

  const int n = graph.vertex_count();
  const double base = (1.0 - params.damping) / n;
  std::vector<double> current(n, 1.0 / n);
  std::vector<double> next(n, 0.0);
  std::vector<double> contribution(n, 0.0);

  PageRankResult result;
  for (int iteration = 0; iteration < params.max_iterations; ++iteration) {
    double dangling = 0.0;
    for (int v = 0; v < n; ++v) {
      if (graph.out_edges[v].empty()) dangling += current[v];
    }
    const double teleport = params.damping * (dangling / n);

#pragma omp parallel for schedule(static) if (parallel)
    for (int v = 0; v < n; ++v) {
      contribution[v] = graph.out_edges[v].empty()
                            ? 0.0
                            : current[v] / static_cast<double>(graph.out_edges[v].size());
    }

#pragma omp parallel for schedule(static) if (parallel)
    for (int v = 0; v < n; ++v) {
      double sum = 0.0;
      for (const int u : graph.in_edges[v]) sum += contribution[u];
      next[v] = base + params.damping * sum + teleport;
    }

    double residual = 0.0;
    for (int v = 0; v < n; ++v) residual += std::abs(next[v] - current[v]);
    current.swap(next);
    result.iterations = iteration + 1;
    result.residual = residual;
    if (residual <= params.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.scores = std::move(current);
  return result;
}

}  // namespace

PageRankResult pagerank(const CitationGraph& graph, const PageRankParams& params) {
  return run(graph, params, true);
}

PageRankResult pagerank_serial(const CitationGraph& graph, const PageRankParams& params) {
  return run(graph, params, false);
}

PageRankResult pagerank_parallel(const CitationGraph& graph, const PageRankParams& params) {
  return run(graph, params, true);
}

void write_pagerank_jsonl(const CitationGraph& graph, const std::vector<double>& scores,
                          const std::string& path) {
  if (scores.size() != graph.ids.size()) {
    throw ValidationError("pagerank vector does not match graph vertex count");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write pagerank file: " + path);
  // Sorted by id so the file does not depend on vertex numbering, which
  // differs between corpus-built graphs and edge-list round-trips.
  std::vector<int> order(graph.ids.size());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<int>(v);
  std::sort(order.begin(), order.end(),
            [&graph](int a, int b) { return graph.ids[a] < graph.ids[b]; });
  for (const int v : order) {
    ordered_json row;
    row["id"] = graph.ids[v];
    row["pagerank"] = scores[v];
    out << row.dump() << '\n';
  }
  if (!out) throw IoError("error while writing pagerank file: " + path);
}

std::vector<double> load_pagerank_jsonl(const CitationGraph& graph, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open pagerank file: " + path);
  std::vector<double> scores(graph.ids.size(), 0.0);
  std::vector<bool> filled(graph.ids.size(), false);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json row;
    try {
      row = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ValidationError("pagerank file " + path + " line " + std::to_string(lineno) + ": " +
                            e.what());
    }
    if (!row.is_object() || !row.contains("id") || !row["id"].is_string() ||
        !row.contains("pagerank") || !row["pagerank"].is_number()) {
      throw ValidationError("pagerank file " + path + " line " + std::to_string(lineno) +
                            ": expected {\"id\": str, \"pagerank\": number}");
    }
    const std::string id = row["id"].get<std::string>();
    const auto it = graph.id_index.find(id);
    if (it == graph.id_index.end()) {
      throw ValidationError("pagerank file " + path + ": unknown id \"" + id + "\"");
    }
    if (filled[it->second]) {
      throw ValidationError("pagerank file " + path + ": duplicate id \"" + id + "\"");
    }
    filled[it->second] = true;
    scores[it->second] = row["pagerank"].get<double>();
  }
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (!filled[v]) {
      throw ValidationError("pagerank file " + path + ": missing id \"" + graph.ids[v] + "\"");
    }
  }
  return scores;
}

}  // namespace newsrank
