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

#include <newsrank/cluster.hpp>

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <map>
#include <utility>

#include <json.hpp>

#include <newsrank/error.hpp>
#include <newsrank/rng.hpp>

namespace newsrank {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Connected components of the subgraph induced on `vertices`, keeping
// only edges with weight >= threshold. Components come out ordered by
// smallest vertex, members sorted ascending.
std::vector<std::vector<int>> threshold_components(const SimilarityGraph& graph,
                                                   const std::vector<int>& vertices,
                                                   double threshold,
                                                   std::vector<int>* membership_scratch,
                                                   int stamp) {
  std::vector<int>& member = *membership_scratch;
  for (const int v : vertices) member[v] = stamp;

  std::vector<std::vector<int>> components;
  std::vector<int> queue;
  for (const int start : vertices) {
    if (member[start] != stamp) continue;  // already claimed by a component
    std::vector<int> component;
    queue.clear();
    queue.push_back(start);
    member[start] = stamp + 1;
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      component.push_back(v);
      for (const auto& [u, weight] : graph.adjacency[v]) {
        if (weight < threshold || member[u] != stamp) continue;
        member[u] = stamp + 1;
        queue.push_back(u);
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

}  // namespace

std::vector<Subgraph> find_subgraphs(const SimilarityGraph& graph, const SplitParams& params) {
  if (params.max_size < 1) throw ValidationError("split max_size must be >= 1");
  if (!(params.epsilon > 0.0)) throw ValidationError("split epsilon must be positive");
  if (!(params.weight_lo < params.weight_hi)) {
    throw ValidationError("split weight range must satisfy lo < hi");
  }

  const int n = graph.vertex_count();
  std::vector<Subgraph> result;
  if (n == 0) return result;

  struct WorkItem {
    std::vector<int> vertices;
    double lo;
    double hi;
  };

  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  std::deque<WorkItem> work;
  work.push_back({std::move(all), params.weight_lo, params.weight_hi});

  // Membership scratch uses stamps so one allocation serves every item:
  // `stamp` marks "in this component set", `stamp + 1` marks visited.
  std::vector<int> membership(n, 0);
  int stamp = 1;

  while (!work.empty()) {
    WorkItem item = std::move(work.front());
    work.pop_front();
    if (static_cast<int>(item.vertices.size()) <= params.max_size) {
      result.push_back({std::move(item.vertices), false});
      continue;
    }
    if (item.hi - item.lo <= params.epsilon) {
      // No threshold in the remaining range separates this component;
      // emit it oversized rather than loop forever.
      result.push_back({std::move(item.vertices), true});
      continue;
    }
    const double mid = (item.lo + item.hi) / 2.0;
    std::vector<std::vector<int>> components =
        threshold_components(graph, item.vertices, mid, &membership, stamp);
    stamp += 2;
    if (components.size() == 1) {
      // mid kept the component whole, so the splitting threshold (if any)
      // is higher: retry the same vertices on [mid, hi].
      work.push_back({std::move(item.vertices), mid, item.hi});
      continue;
    }
    if (components.size() == item.vertices.size()) {
      // mid isolated every vertex, jumping past all internal structure;
      // retry the same vertices on [lo, mid]. Components with no usable
      // threshold anywhere in the range (a uniform-weight clique, say)
      // oscillate here until the range collapses and the oversized
      // emission above keeps them intact.
      work.push_back({std::move(item.vertices), item.lo, mid});
      continue;
    }
    for (auto& component : components) {
      if (static_cast<int>(component.size()) <= params.max_size) {
        result.push_back({std::move(component), false});
      } else {
        work.push_back({std::move(component), mid, item.hi});
      }
    }
  }
  return result;
}

double partition_objective(const SimilarityGraph& graph, const std::vector<int>& vertices,
                           const std::vector<int>& labels, double missing_edge_weight) {
  if (vertices.size() != labels.size()) {
    throw ValidationError("labels must align with the vertex list");
  }
  const int s = static_cast<int>(vertices.size());
  std::unordered_map<int, int> local_of;
  local_of.reserve(vertices.size());
  for (int i = 0; i < s; ++i) local_of.emplace(vertices[i], i);

  // Per cluster: member count, total present internal weight, and present
  // internal edge count; missing pairs are inferred from the count.
  std::unordered_map<int, int> sizes;
  std::unordered_map<int, double> weights;
  std::unordered_map<int, std::int64_t> present;
  for (int i = 0; i < s; ++i) ++sizes[labels[i]];
  for (int i = 0; i < s; ++i) {
    for (const auto& [u, weight] : graph.adjacency[vertices[i]]) {
      const auto it = local_of.find(u);
      if (it == local_of.end() || labels[it->second] != labels[i]) continue;
      weights[labels[i]] += weight;  // both endpoints add: halved below
      ++present[labels[i]];
    }
  }

  double objective = 0.0;
  for (const auto& [label, size] : sizes) {
    const double internal = weights.count(label) != 0 ? weights.at(label) / 2.0 : 0.0;
    const std::int64_t edges = present.count(label) != 0 ? present.at(label) / 2 : 0;
    const std::int64_t pairs = static_cast<std::int64_t>(size) * (size - 1) / 2;
    objective += internal + missing_edge_weight * static_cast<double>(pairs - edges);
  }
  return objective;
}

LocalClusterResult greedy_local_cluster(const SimilarityGraph& graph,
                                        const std::vector<int>& vertices,
                                        const LocalParams& params) {
  if (!(params.missing_edge_weight < 0.0)) {
    throw ValidationError("missing_edge_weight must be negative");
  }
  if (params.restarts < 1) throw ValidationError("restarts must be >= 1");

  LocalClusterResult best;
  const int s = static_cast<int>(vertices.size());
  if (s == 0) return best;

  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());

  // Local adjacency restricted to the subgraph.
  std::unordered_map<int, int> local_of;
  local_of.reserve(sorted.size());
  for (int i = 0; i < s; ++i) local_of.emplace(sorted[i], i);
  std::vector<std::vector<SimilarityGraph::Neighbor>> adjacency(s);
  for (int i = 0; i < s; ++i) {
    for (const auto& [u, weight] : graph.adjacency[sorted[i]]) {
      const auto it = local_of.find(u);
      if (it != local_of.end()) adjacency[i].push_back({it->second, weight});
    }
  }

  const double omega = params.missing_edge_weight;
  // Hard stops against floating-point move cycles; sweeps and rounds
  // normally stop on their own when no strictly improving move exists.
  constexpr int kMaxSweeps = 1000;
  constexpr int kMaxRounds = 1000;

  std::vector<int> order(s);
  std::vector<int> labels(s);
  std::vector<int> cluster_size(s);
  std::vector<double> weight_to(s, 0.0);
  std::vector<int> edges_to(s, 0);
  std::vector<int> touched;

  // Sweeps move single vertices until no strictly improving move exists. A
  // vertex may join any neighbor's cluster or detach into a free singleton
  // when its score inside the current cluster is negative.
  const auto run_sweeps = [&] {
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      bool improved = false;
      for (const int v : order) {
        const int from = labels[v];
        touched.clear();
        for (const auto& [u, weight] : adjacency[v]) {
          const int cluster = labels[u];
          if (edges_to[cluster] == 0 && weight_to[cluster] == 0.0) touched.push_back(cluster);
          weight_to[cluster] += weight;
          ++edges_to[cluster];
        }
        // Score of v inside a cluster C: w(v,C) + omega * (|C \ {v}| - a(v,C)).
        const double current = weight_to[from] +
                               omega * static_cast<double>(cluster_size[from] - 1 -
                                                           edges_to[from]);
        int best_target = -1;
        double best_delta = 0.0;
        for (const int target : touched) {
          if (target == from) continue;
          const double gain =
              weight_to[target] +
              omega * static_cast<double>(cluster_size[target] - edges_to[target]);
          const double delta = gain - current;
          if (delta > best_delta ||
              (delta == best_delta && best_target != -1 && target < best_target)) {
            best_delta = delta;
            best_target = target;
          }
        }
        // Detaching contributes nothing, so it wins only when every join is
        // worse and v's score inside its own cluster is negative. A cluster
        // of size >= 2 guarantees some label in [0, s) is free.
        bool detach = false;
        if (cluster_size[from] > 1 && -current > best_delta) {
          best_delta = -current;
          detach = true;
        }
        for (const int cluster : touched) {
          weight_to[cluster] = 0.0;
          edges_to[cluster] = 0;
        }
        if (best_delta > 0.0) {
          --cluster_size[from];
          if (detach) {
            int fresh = 0;
            while (cluster_size[fresh] != 0) ++fresh;
            labels[v] = fresh;
            cluster_size[fresh] = 1;
          } else {
            ++cluster_size[best_target];
            labels[v] = best_target;
          }
          improved = true;
        }
      }
      if (!improved) return sweep > 0;
    }
    return true;
  };

  // Single-vertex moves strand pairs of clusters whose union scores higher
  // than both parts: every one-vertex step out of either cluster can be
  // losing even though the joint move wins. Once the sweeps converge, merge
  // edge-sharing cluster pairs whenever the union strictly improves the
  // objective, best pair first.
  const auto run_merges = [&] {
    // cluster_adj[a][b] = (cross edge weight, cross edge count) for b > a.
    std::vector<std::map<int, std::pair<double, int>>> cluster_adj(s);
    for (int v = 0; v < s; ++v) {
      for (const auto& [u, weight] : adjacency[v]) {
        if (u <= v || labels[u] == labels[v]) continue;
        const auto [lo, hi] = std::minmax(labels[v], labels[u]);
        auto& entry = cluster_adj[lo][hi];
        entry.first += weight;
        ++entry.second;
      }
    }
    bool merged = false;
    while (true) {
      int best_lo = -1;
      int best_hi = -1;
      double best_delta = 0.0;
      for (int lo = 0; lo < s; ++lo) {
        for (const auto& [hi, entry] : cluster_adj[lo]) {
          const double pairs = static_cast<double>(cluster_size[lo]) *
                               static_cast<double>(cluster_size[hi]);
          const double delta = entry.first + omega * (pairs - static_cast<double>(entry.second));
          if (delta > best_delta) {
            best_delta = delta;
            best_lo = lo;
            best_hi = hi;
          }
        }
      }
      if (best_lo < 0) break;
      for (int v = 0; v < s; ++v) {
        if (labels[v] == best_hi) labels[v] = best_lo;
      }
      cluster_size[best_lo] += cluster_size[best_hi];
      cluster_size[best_hi] = 0;
      // Fold the absorbed cluster's cross entries into the survivor; cross
      // weights and counts are additive under cluster union.
      cluster_adj[best_lo].erase(best_hi);
      for (int lo = 0; lo < best_hi; ++lo) {
        const auto it = cluster_adj[lo].find(best_hi);
        if (it == cluster_adj[lo].end()) continue;
        const auto [lo2, hi2] = std::minmax(lo, best_lo);
        auto& entry = cluster_adj[lo2][hi2];
        entry.first += it->second.first;
        entry.second += it->second.second;
        cluster_adj[lo].erase(it);
      }
      for (const auto& [hi, cross] : cluster_adj[best_hi]) {
        const auto [lo2, hi2] = std::minmax(hi, best_lo);
        auto& entry = cluster_adj[lo2][hi2];
        entry.first += cross.first;
        entry.second += cross.second;
      }
      cluster_adj[best_hi].clear();
      merged = true;
    }
    return merged;
  };

  double best_objective = -std::numeric_limits<double>::infinity();
  for (int pass = 0; pass < params.restarts; ++pass) {
    for (int i = 0; i < s; ++i) order[i] = i;
    SplitMix64 rng(params.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(pass));
    rng.shuffle(&order);

    for (int i = 0; i < s; ++i) labels[i] = i;
    std::fill(cluster_size.begin(), cluster_size.end(), 1);

    for (int round = 0; round < kMaxRounds; ++round) {
      run_sweeps();
      if (!run_merges()) break;
    }

    // The pass objective is recomputed from scratch so accumulated move
    // deltas cannot drift from the reported value.
    std::vector<int> pass_labels(s);
    for (int i = 0; i < s; ++i) pass_labels[i] = labels[i];
    const double objective = partition_objective(graph, sorted, pass_labels, omega);
    if (objective > best_objective) {
      best_objective = objective;
      best.labels = std::move(pass_labels);
      best.objective = objective;
      best.best_pass = pass;
    }
  }

  // Dense relabel in order of first appearance over sorted vertices.
  std::unordered_map<int, int> dense;
  for (int& label : best.labels) {
    label = dense.emplace(label, static_cast<int>(dense.size())).first->second;
  }
  return best;
}

ClusterAssignment three_step_cluster(
    const std::vector<std::pair<std::string, std::string>>& id_titles,
    const EmbeddingProvider& provider, const ClusterParams& params) {
  ClusterAssignment assignment;
  if (id_titles.empty()) return assignment;

  // Step 1: exact-duplicate grouping on normalized titles.
  const std::vector<MiniCluster> minis = hash_dedup_titles(id_titles);
  const int m = static_cast<int>(minis.size());

  // Step 2: embed one representative per group.
  std::vector<std::string> keys;
  keys.reserve(minis.size());
  for (const MiniCluster& mini : minis) keys.push_back(mini.normalized_title);
  std::vector<EmbeddingVector> vectors;
  provider.embed_batch(keys, &vectors, nullptr);

  EmbeddingSet set;
  set.keys = keys;
  set.dimension = provider.dimension();
  set.data.resize(static_cast<std::size_t>(m) * set.dimension);
  for (int i = 0; i < m; ++i) {
    if (vectors[i].dimension() != set.dimension) {
      throw ValidationError("provider returned a vector of unexpected dimension for \"" +
                            keys[i] + "\"");
    }
    std::copy(vectors[i].values.begin(), vectors[i].values.end(),
              set.data.begin() + static_cast<std::size_t>(i) * set.dimension);
  }

  // Step 3: kNN graph, size-bounded split, greedy refinement. Subgraphs
  // are independent, so they parallelize; results merge by subgraph index
  // and thread count never affects the outcome.
  const SimilarityGraph knn =
      build_knn_graph(set, {params.knn_k, params.min_similarity});
  const std::vector<Subgraph> subgraphs = find_subgraphs(knn, params.split);

  std::vector<LocalClusterResult> locals(subgraphs.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(subgraphs.size()); ++i) {
    locals[i] = greedy_local_cluster(knn, subgraphs[i].vertices, params.local);
  }

  // Merge: (subgraph, local label) -> provisional global label.
  std::vector<int> vertex_cluster(m, -1);
  int next_label = 0;
  for (std::size_t i = 0; i < subgraphs.size(); ++i) {
    std::vector<int> sorted = subgraphs[i].vertices;
    std::sort(sorted.begin(), sorted.end());
    int local_count = 0;
    for (const int label : locals[i].labels) local_count = std::max(local_count, label + 1);
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      vertex_cluster[sorted[j]] = next_label + locals[i].labels[j];
    }
    next_label += local_count;
  }

  // Expand mini-clusters and relabel densely, ordered by each cluster's
  // smallest article id so output labels are stable and human-checkable.
  std::vector<std::string> smallest(next_label);
  for (int v = 0; v < m; ++v) {
    const int cluster = vertex_cluster[v];
    const std::string& candidate = minis[v].representative;
    if (smallest[cluster].empty() || candidate < smallest[cluster]) {
      smallest[cluster] = candidate;
    }
  }
  std::vector<int> by_smallest(next_label);
  for (int c = 0; c < next_label; ++c) by_smallest[c] = c;
  std::sort(by_smallest.begin(), by_smallest.end(),
            [&smallest](int a, int b) { return smallest[a] < smallest[b]; });
  std::vector<int> final_label(next_label);
  for (int rank = 0; rank < next_label; ++rank) final_label[by_smallest[rank]] = rank;

  for (int v = 0; v < m; ++v) {
    const int label = final_label[vertex_cluster[v]];
    for (const std::string& id : minis[v].member_ids) {
      assignment.labels.emplace(id, label);
    }
  }
  assignment.cluster_count = next_label;
  return assignment;
}

void write_clusters_jsonl(const ClusterAssignment& assignment,
                          const std::vector<std::string>& ids, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write cluster file: " + path);
  for (const std::string& id : ids) {
    const auto it = assignment.labels.find(id);
    if (it == assignment.labels.end()) {
      throw ValidationError("no cluster assigned for id \"" + id + "\"");
    }
    ordered_json row;
    row["id"] = id;
    row["cluster"] = it->second;
    out << row.dump() << '\n';
  }
  if (!out) throw IoError("error while writing cluster file: " + path);
}

ClusterAssignment load_clusters_jsonl(const std::string& path, std::vector<std::string>* order) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open cluster file: " + path);
  if (order) order->clear();
  ClusterAssignment assignment;
  std::string line;
  std::size_t lineno = 0;
  int max_label = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json row;
    try {
      row = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ValidationError("cluster file " + path + " line " + std::to_string(lineno) + ": " +
                            e.what());
    }
    if (!row.is_object() || !row.contains("id") || !row["id"].is_string() ||
        !row.contains("cluster") || !row["cluster"].is_number_integer()) {
      throw ValidationError("cluster file " + path + " line " + std::to_string(lineno) +
                            ": expected {\"id\": str, \"cluster\": int}");
    }
    const std::string id = row["id"].get<std::string>();
    const int cluster = row["cluster"].get<int>();
    if (!assignment.labels.emplace(id, cluster).second) {
      throw ValidationError("cluster file " + path + ": duplicate id \"" + id + "\"");
    }
    if (order) order->push_back(id);
    max_label = std::max(max_label, cluster);
  }
  assignment.cluster_count = max_label + 1;
  return assignment;
}

}  // namespace newsrank
