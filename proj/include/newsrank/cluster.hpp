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

#ifndef NEWSRANK_CLUSTER_HPP_
#define NEWSRANK_CLUSTER_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <newsrank/embed.hpp>
#include <newsrank/knn.hpp>

namespace newsrank {

struct SplitParams {
  int max_size = 512;        // target upper bound per subgraph
  double epsilon = 0.05;     // stop refining when the range is this tight
  double weight_lo = 0.0;    // initial threshold range
  double weight_hi = 1.0;
};

// One subgraph produced by threshold splitting: original vertex indices,
// sorted ascending.
struct Subgraph {
  std::vector<int> vertices;
  bool oversized = false;  // larger than max_size but range was exhausted
};

// Recursively splits the similarity graph into connected components of at
// most `max_size` vertices by raising an edge-weight threshold via binary
// search. Components still above the bound when the threshold range
// narrows to `epsilon` are emitted as-is and flagged oversized.
std::vector<Subgraph> find_subgraphs(const SimilarityGraph& graph, const SplitParams& params = {});

struct LocalParams {
  double missing_edge_weight = -0.1;  // charge for absent intra-cluster pairs
  int restarts = 8;
  std::uint64_t seed = 42;
};

struct LocalClusterResult {
  std::vector<int> labels;  // dense labels 0..k-1 in first-vertex order
  double objective = 0.0;   // sum over clusters of internal score
  int best_pass = 0;
};

// Greedy label propagation over one subgraph: vertices start as
// singletons and repeatedly take the best strictly improving move into a
// neighboring cluster. Runs `restarts` seeded passes over shuffled vertex
// orders and keeps the highest-objective result.
LocalClusterResult greedy_local_cluster(const SimilarityGraph& graph,
                                        const std::vector<int>& vertices,
                                        const LocalParams& params = {});

// Objective of a labeling: for every cluster, the sum of present internal
// edge weights plus `missing_edge_weight` for each internal pair with no
// edge. Exposed for invariant checks.
double partition_objective(const SimilarityGraph& graph, const std::vector<int>& vertices,
                           const std::vector<int>& labels, double missing_edge_weight);

struct ClusterParams {
  int knn_k = 20;
  // Noise floor for kNN edges. Signed feature hashing at the default 128
  // dimensions gives unrelated titles a cosine spread of roughly 0.09, so
  // 0.4 sits far above collision noise while true title variants, which
  // share most tokens, score well beyond it.
  double min_similarity = 0.4;
  SplitParams split;
  LocalParams local;
  int embed_dimension = 128;
};

// Final assignment: article id -> cluster label, labels dense and ordered
// by each cluster's smallest article id.
struct ClusterAssignment {
  std::unordered_map<std::string, int> labels;
  int cluster_count = 0;
};

// Full three-step pipeline: exact-duplicate title grouping, embedding of
// the surviving representatives, kNN graph construction, threshold
// splitting, then greedy refinement per subgraph.
ClusterAssignment three_step_cluster(
    const std::vector<std::pair<std::string, std::string>>& id_titles,
    const EmbeddingProvider& provider, const ClusterParams& params = {});

// JSONL ({"id", "cluster"}) round-trip for snapshot directories. When
// `order` is given it receives the ids in file order.
void write_clusters_jsonl(const ClusterAssignment& assignment,
                          const std::vector<std::string>& ids, const std::string& path);
ClusterAssignment load_clusters_jsonl(const std::string& path,
                                      std::vector<std::string>* order = nullptr);

}  // namespace newsrank

#endif  // NEWSRANK_CLUSTER_HPP_
