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

#include <newsrank/knn.hpp>

#include <algorithm>
#include <utility>

#include <Eigen/Dense>

#include <newsrank/error.hpp>

namespace newsrank {
namespace {

using RowMajorMatrixXf =
    Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Queries are processed in fixed-size blocks so the serial and parallel
// builds run the exact same GEMM shapes on the exact same data; thread
// count only changes which worker handles a block, never its result.
constexpr int kQueryBlock = 64;

// Final edge weights come from this fixed-order double accumulation; it
// is symmetric in its arguments, unlike raw GEMM cells.
double scalar_dot(const float* a, const float* b, int dimension) {
  double dot = 0.0;
  for (int i = 0; i < dimension; ++i) {
    dot += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  }
  return dot;
}

// Selects the top-k proposals for queries [begin, end) into
// proposals[begin..end); candidate ranking uses the single-precision
// similarities, ties broken by smaller index.
void process_block(const EmbeddingSet& embeddings,
                   const Eigen::Map<const RowMajorMatrixXf>& all, int begin, int end,
                   const KnnParams& params, std::vector<std::vector<int>>* proposals) {
  const int n = embeddings.size();
  const Eigen::MatrixXf sims = all.middleRows(begin, end - begin) * all.transpose();
  std::vector<int> candidates;
  candidates.reserve(n);
  for (int q = begin; q < end; ++q) {
    const int row = q - begin;
    candidates.clear();
    for (int j = 0; j < n; ++j) {
      if (j != q && static_cast<double>(sims(row, j)) >= params.min_similarity) {
        candidates.push_back(j);
      }
    }
    const auto better = [&sims, row](int a, int b) {
      const float sa = sims(row, a);
      const float sb = sims(row, b);
      if (sa != sb) return sa > sb;
      return a < b;
    };
    auto& out = (*proposals)[q];
    if (static_cast<int>(candidates.size()) > params.k) {
      std::nth_element(candidates.begin(), candidates.begin() + params.k, candidates.end(),
                       better);
      candidates.resize(params.k);
    }
    std::sort(candidates.begin(), candidates.end());
    out = candidates;
  }
}

SimilarityGraph build(const EmbeddingSet& embeddings, const KnnParams& params, bool parallel) {
  if (params.k < 1) throw ValidationError("knn k must be >= 1");
  const int n = embeddings.size();
  SimilarityGraph graph;
  graph.adjacency.resize(n);
  if (n < 2) return graph;
  if (embeddings.dimension < 1 ||
      embeddings.data.size() !=
          static_cast<std::size_t>(n) * static_cast<std::size_t>(embeddings.dimension)) {
    throw ValidationError("embedding set shape mismatch");
  }

  const Eigen::Map<const RowMajorMatrixXf> all(embeddings.data.data(), n,
                                               embeddings.dimension);
  std::vector<std::vector<int>> proposals(n);
  const int blocks = (n + kQueryBlock - 1) / kQueryBlock;

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int b = 0; b < blocks; ++b) {
      const int begin = b * kQueryBlock;
      process_block(embeddings, all, begin, std::min(begin + kQueryBlock, n), params,
                    &proposals);
    }
  } else {
    for (int b = 0; b < blocks; ++b) {
      const int begin = b * kQueryBlock;
      process_block(embeddings, all, begin, std::min(begin + kQueryBlock, n), params,
                    &proposals);
    }
  }

  // Union-symmetrize the directed proposals, then recompute each surviving
  // weight with the order-fixed double dot so (a,b) and (b,a) agree
  // exactly; the recomputed value is re-checked against the floor.
  std::vector<std::pair<int, int>> edges;
  for (int q = 0; q < n; ++q) {
    for (const int j : proposals[q]) {
      edges.emplace_back(std::min(q, j), std::max(q, j));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  for (const auto& [a, b] : edges) {
    const double weight =
        scalar_dot(embeddings.row(a), embeddings.row(b), embeddings.dimension);
    if (weight < params.min_similarity) continue;
    graph.adjacency[a].push_back({b, weight});
    graph.adjacency[b].push_back({a, weight});
  }
  for (auto& neighbors : graph.adjacency) {
    std::sort(neighbors.begin(), neighbors.end(),
              [](const SimilarityGraph::Neighbor& x, const SimilarityGraph::Neighbor& y) {
                return x.index < y.index;
              });
  }
  return graph;
}

}  // namespace

std::int64_t SimilarityGraph::edge_count() const {
  std::int64_t total = 0;
  for (const auto& neighbors : adjacency) total += static_cast<std::int64_t>(neighbors.size());
  return total / 2;
}

SimilarityGraph build_knn_graph(const EmbeddingSet& embeddings, const KnnParams& params) {
  return build(embeddings, params, true);
}

SimilarityGraph build_knn_graph_serial(const EmbeddingSet& embeddings, const KnnParams& params) {
  return build(embeddings, params, false);
}

SimilarityGraph build_knn_graph_parallel(const EmbeddingSet& embeddings,
                                         const KnnParams& params) {
  return build(embeddings, params, true);
}

}  // namespace newsrank
