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

#ifndef NEWSRANK_KNN_HPP_
#define NEWSRANK_KNN_HPP_

#include <string>
#include <vector>

#include <newsrank/embed.hpp>

namespace newsrank {

// Dense row-major embedding matrix with one row per key.
struct EmbeddingSet {
  std::vector<std::string> keys;
  std::vector<float> data;  // keys.size() * dimension floats
  int dimension = 0;

  int size() const { return static_cast<int>(keys.size()); }
  const float* row(int i) const { return data.data() + static_cast<std::size_t>(i) * dimension; }
};

// Undirected weighted similarity graph stored as an adjacency list.
// Neighbor lists are sorted by index and never contain self-loops.
struct SimilarityGraph {
  struct Neighbor {
    int index;
    double weight;
  };

  std::vector<std::vector<Neighbor>> adjacency;

  int vertex_count() const { return static_cast<int>(adjacency.size()); }
  std::int64_t edge_count() const;  // undirected edges
};

struct KnnParams {
  int k = 20;
  double min_similarity = 0.0;  // keep edges with similarity >= threshold
};

// Exact k-nearest-neighbor graph under cosine similarity. Each vertex
// proposes its k best neighbors (ties broken by smaller index) and the
// proposals are union-symmetrized into an undirected graph.
SimilarityGraph build_knn_graph(const EmbeddingSet& embeddings, const KnnParams& params = {});

// Serial reference and OpenMP variants; both run the same fixed-size
// block kernel, so outputs match bitwise.
SimilarityGraph build_knn_graph_serial(const EmbeddingSet& embeddings,
                                       const KnnParams& params = {});
SimilarityGraph build_knn_graph_parallel(const EmbeddingSet& embeddings,
                                         const KnnParams& params = {});

}  // namespace newsrank

#endif  // NEWSRANK_KNN_HPP_
