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

/*
 * Serial-reference vs OpenMP-kernel benchmarks. Thread count is taken
 * from OMP_NUM_THREADS, so the same binary measures both scaling and the
 * single-thread overhead of the parallel code paths.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <benchmark/benchmark.h>

#include <newsrank/citation.hpp>
#include <newsrank/cluster.hpp>
#include <newsrank/embed.hpp>
#include <newsrank/knn.hpp>
#include <newsrank/pagerank.hpp>
#include <newsrank/rng.hpp>
#include <newsrank/synth.hpp>

namespace {

using newsrank::CitationGraph;
using newsrank::EmbeddingSet;
using newsrank::SimilarityGraph;
using newsrank::SplitMix64;

// Sparse random digraph with ~`mean_degree` outbound edges per vertex.
CitationGraph random_citation_graph(int vertices, int mean_degree, std::uint64_t seed) {
  SplitMix64 rng(seed);
  CitationGraph graph;
  graph.ids.resize(vertices);
  graph.out_edges.resize(vertices);
  graph.in_edges.resize(vertices);
  for (int v = 0; v < vertices; ++v) {
    graph.ids[v] = "a" + std::to_string(v);
    const int degree = static_cast<int>(rng.bounded(2 * mean_degree + 1));
    std::vector<int>& out = graph.out_edges[v];
    for (int i = 0; i < degree; ++i) {
      const int u = static_cast<int>(rng.bounded(vertices));
      if (u != v) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (const int u : out) graph.in_edges[u].push_back(v);
  }
  for (std::vector<int>& in : graph.in_edges) std::sort(in.begin(), in.end());
  return graph;
}

// Random unit vectors, one row per key.
EmbeddingSet random_embeddings(int rows, int dimension, std::uint64_t seed) {
  SplitMix64 rng(seed);
  EmbeddingSet set;
  set.dimension = dimension;
  set.keys.resize(rows);
  set.data.resize(static_cast<std::size_t>(rows) * dimension);
  for (int i = 0; i < rows; ++i) {
    set.keys[i] = "t" + std::to_string(i);
    double norm_sq = 0.0;
    for (int d = 0; d < dimension; ++d) {
      const double value = rng.unit() * 2.0 - 1.0;
      set.data[static_cast<std::size_t>(i) * dimension + d] = static_cast<float>(value);
      norm_sq += value * value;
    }
    const float inv = static_cast<float>(1.0 / std::sqrt(norm_sq));
    for (int d = 0; d < dimension; ++d) {
      set.data[static_cast<std::size_t>(i) * dimension + d] *= inv;
    }
  }
  return set;
}

// Random symmetric similarity graph with ~`mean_degree` neighbors.
SimilarityGraph random_similarity_graph(int vertices, int mean_degree, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::vector<std::pair<int, double>>> raw(vertices);
  for (int v = 0; v < vertices; ++v) {
    for (int i = 0; i < mean_degree / 2; ++i) {
      const int u = static_cast<int>(rng.bounded(vertices));
      if (u == v) continue;
      const double weight = rng.unit();
      raw[v].emplace_back(u, weight);
      raw[u].emplace_back(v, weight);
    }
  }
  SimilarityGraph graph;
  graph.adjacency.resize(vertices);
  for (int v = 0; v < vertices; ++v) {
    std::sort(raw[v].begin(), raw[v].end());
    raw[v].erase(std::unique(raw[v].begin(), raw[v].end(),
                             [](const auto& a, const auto& b) { return a.first == b.first; }),
                 raw[v].end());
    for (const auto& [index, weight] : raw[v]) {
      graph.adjacency[v].push_back({index, weight});
    }
  }
  return graph;
}

void BM_PageRankSerial(benchmark::State& state) {
  const CitationGraph graph =
      random_citation_graph(static_cast<int>(state.range(0)), 20, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(newsrank::pagerank_serial(graph));
  }
  state.SetItemsProcessed(state.iterations() * graph.vertex_count());
}
BENCHMARK(BM_PageRankSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_PageRankParallel(benchmark::State& state) {
  const CitationGraph graph =
      random_citation_graph(static_cast<int>(state.range(0)), 20, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(newsrank::pagerank_parallel(graph));
  }
  state.SetItemsProcessed(state.iterations() * graph.vertex_count());
}
BENCHMARK(BM_PageRankParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_KnnSerial(benchmark::State& state) {
  const EmbeddingSet set = random_embeddings(static_cast<int>(state.range(0)), 128, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(newsrank::build_knn_graph_serial(set));
  }
  state.SetItemsProcessed(state.iterations() * set.size());
}
BENCHMARK(BM_KnnSerial)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

void BM_KnnParallel(benchmark::State& state) {
  const EmbeddingSet set = random_embeddings(static_cast<int>(state.range(0)), 128, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(newsrank::build_knn_graph_parallel(set));
  }
  state.SetItemsProcessed(state.iterations() * set.size());
}
BENCHMARK(BM_KnnParallel)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

void BM_GreedyLocalCluster(benchmark::State& state) {
  const int vertices = static_cast<int>(state.range(0));
  const SimilarityGraph graph = random_similarity_graph(vertices, 16, 42);
  std::vector<int> all(vertices);
  for (int v = 0; v < vertices; ++v) all[v] = v;
  for (auto _ : state) {
    benchmark::DoNotOptimize(newsrank::greedy_local_cluster(graph, all));
  }
  state.SetItemsProcessed(state.iterations() * vertices);
}
BENCHMARK(BM_GreedyLocalCluster)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

// End-to-end clustering; subgraphs are refined in an OpenMP loop, so this
// one scales with OMP_NUM_THREADS without a dedicated serial twin.
void BM_ThreeStepCluster(benchmark::State& state) {
  newsrank::SynthParams params;
  params.events = static_cast<int>(state.range(0));
  params.followers_per_event = 9;
  const newsrank::SyntheticCorpus synth = newsrank::generate_synthetic_corpus(params);
  std::vector<std::pair<std::string, std::string>> id_titles;
  id_titles.reserve(synth.corpus.articles.size());
  for (const newsrank::Article& article : synth.corpus.articles) {
    id_titles.emplace_back(article.id, article.title);
  }
  const newsrank::FeatureHashProvider provider(128);
  for (auto _ : state) {
    benchmark::DoNotOptimize(newsrank::three_step_cluster(id_titles, provider));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(id_titles.size()));
}
BENCHMARK(BM_ThreeStepCluster)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
