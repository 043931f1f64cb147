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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <newsrank/error.hpp>

#include "oracle.hpp"

namespace newsrank {
namespace {

EmbeddingSet make_set(const std::vector<std::vector<float>>& rows) {
  EmbeddingSet set;
  set.dimension = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    set.keys.push_back("k" + std::to_string(i));
    set.data.insert(set.data.end(), rows[i].begin(), rows[i].end());
  }
  return set;
}

void expect_same_graph(const SimilarityGraph& actual, const SimilarityGraph& expected) {
  ASSERT_EQ(actual.vertex_count(), expected.vertex_count());
  for (int v = 0; v < actual.vertex_count(); ++v) {
    ASSERT_EQ(actual.adjacency[v].size(), expected.adjacency[v].size()) << "vertex " << v;
    for (std::size_t i = 0; i < actual.adjacency[v].size(); ++i) {
      EXPECT_EQ(actual.adjacency[v][i].index, expected.adjacency[v][i].index)
          << "vertex " << v << " slot " << i;
      EXPECT_DOUBLE_EQ(actual.adjacency[v][i].weight, expected.adjacency[v][i].weight)
          << "vertex " << v << " slot " << i;
    }
  }
}

TEST(Knn, SmallSetWithLowFloorIsComplete) {
  const EmbeddingSet set = testing::random_embeddings(5, 8, 11);
  KnnParams params;
  params.k = 4;  // k >= n - 1, so nothing is truncated
  params.min_similarity = -1.0;
  const SimilarityGraph graph = build_knn_graph(set, params);
  EXPECT_EQ(graph.vertex_count(), 5);
  EXPECT_EQ(graph.edge_count(), 10);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(graph.adjacency[v].size(), 4u);
}

TEST(Knn, IdenticalVectorsShareWeightOne) {
  const EmbeddingSet set = make_set({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  KnnParams params;
  params.k = 2;
  params.min_similarity = -1.0;
  const SimilarityGraph graph = build_knn_graph(set, params);
  ASSERT_GE(graph.adjacency[0].size(), 1u);
  EXPECT_EQ(graph.adjacency[0][0].index, 1);
  EXPECT_DOUBLE_EQ(graph.adjacency[0][0].weight, 1.0);
}

TEST(Knn, FloorDropsWeakPairs) {
  // Pairwise similarities: (0,1) = 0.6, (1,2) = 0.8, (0,2) = 0.
  const EmbeddingSet set = make_set({{1, 0}, {0.6f, 0.8f}, {0, 1}});
  KnnParams params;
  params.k = 2;
  params.min_similarity = 0.5;
  const SimilarityGraph graph = build_knn_graph(set, params);
  EXPECT_EQ(graph.edge_count(), 2);
  ASSERT_EQ(graph.adjacency[0].size(), 1u);
  EXPECT_EQ(graph.adjacency[0][0].index, 1);
  EXPECT_NEAR(graph.adjacency[0][0].weight, 0.6, 1e-7);
  EXPECT_EQ(graph.adjacency[2].size(), 1u);
  EXPECT_EQ(graph.adjacency[2][0].index, 1);
}

TEST(Knn, MatchesBruteForceOracle) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const EmbeddingSet set = testing::random_embeddings(40, 16, seed * 101);
    KnnParams params;
    params.k = 5;
    params.min_similarity = -1.0;
    const SimilarityGraph actual = build_knn_graph(set, params);
    const SimilarityGraph expected = testing::oracle_knn(set, params.k, params.min_similarity);
    expect_same_graph(actual, expected);
  }
}

TEST(Knn, TenVectorFixtureMatchesOracleWithDefaultFloor) {
  const EmbeddingSet set = testing::random_embeddings(10, 8, 77);
  KnnParams params;
  params.k = 3;
  params.min_similarity = 0.0;
  expect_same_graph(build_knn_graph(set, params),
                    testing::oracle_knn(set, params.k, params.min_similarity));
}

TEST(Knn, GraphIsSymmetricWithoutSelfLoops) {
  const EmbeddingSet set = testing::random_embeddings(60, 12, 5);
  KnnParams params;
  params.k = 4;
  params.min_similarity = -1.0;
  const SimilarityGraph graph = build_knn_graph(set, params);
  for (int v = 0; v < graph.vertex_count(); ++v) {
    int previous = -1;
    for (const SimilarityGraph::Neighbor& neighbor : graph.adjacency[v]) {
      EXPECT_NE(neighbor.index, v);
      EXPECT_GT(neighbor.index, previous);  // sorted, so also duplicate-free
      previous = neighbor.index;
      bool reciprocal = false;
      for (const SimilarityGraph::Neighbor& back : graph.adjacency[neighbor.index]) {
        if (back.index == v) {
          reciprocal = true;
          EXPECT_DOUBLE_EQ(back.weight, neighbor.weight);
        }
      }
      EXPECT_TRUE(reciprocal) << v << " -> " << neighbor.index;
    }
  }
}

TEST(Knn, SerialAndParallelMatchExactly) {
  // More rows than one query block so the block loop actually splits.
  const EmbeddingSet set = testing::random_embeddings(300, 32, 13);
  KnnParams params;
  params.k = 10;
  params.min_similarity = 0.0;
  expect_same_graph(build_knn_graph_parallel(set, params),
                    build_knn_graph_serial(set, params));
}

TEST(Knn, RepeatedBuildsAreIdentical) {
  const EmbeddingSet set = testing::random_embeddings(150, 24, 29);
  KnnParams params;
  params.k = 6;
  expect_same_graph(build_knn_graph(set, params), build_knn_graph(set, params));
}

TEST(Knn, DegenerateInputs) {
  KnnParams params;
  params.k = 3;
  EXPECT_EQ(build_knn_graph(EmbeddingSet{}, params).vertex_count(), 0);
  const EmbeddingSet single = make_set({{1, 0}});
  EXPECT_EQ(build_knn_graph(single, params).edge_count(), 0);

  params.k = 0;
  EXPECT_THROW(build_knn_graph(single, params), ValidationError);

  EmbeddingSet ragged = make_set({{1, 0}, {0, 1}});
  ragged.data.pop_back();
  params.k = 3;
  EXPECT_THROW(build_knn_graph(ragged, params), ValidationError);
}

}  // namespace
}  // namespace newsrank
