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

#include <newsrank/pipeline.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <memory>
#include <utility>

#include <json.hpp>

#include <newsrank/embed.hpp>
#include <newsrank/error.hpp>
#include <newsrank/timeutil.hpp>

namespace newsrank {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

void check_keys(const json& object, std::initializer_list<const char*> allowed,
                const std::string& scope) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ValidationError("unknown config key \"" + scope + key + "\"");
    }
  }
}

double get_number(const json& object, const char* key, double fallback,
                  const std::string& scope) {
  const auto it = object.find(key);
  if (it == object.end()) return fallback;
  if (!it->is_number()) {
    throw ValidationError("config key \"" + scope + key + "\" must be a number");
  }
  return it->get<double>();
}

int get_int(const json& object, const char* key, int fallback, const std::string& scope) {
  const auto it = object.find(key);
  if (it == object.end()) return fallback;
  if (!it->is_number_integer()) {
    throw ValidationError("config key \"" + scope + key + "\" must be an integer");
  }
  return it->get<int>();
}

std::uint64_t get_seed(const json& object, const char* key, std::uint64_t fallback,
                       const std::string& scope) {
  const auto it = object.find(key);
  if (it == object.end()) return fallback;
  if (!it->is_number_integer() || (it->is_number_integer() && it->get<std::int64_t>() < 0)) {
    throw ValidationError("config key \"" + scope + key +
                          "\" must be a non-negative integer");
  }
  return it->get<std::uint64_t>();
}

std::string get_string(const json& object, const char* key, std::string fallback,
                       const std::string& scope) {
  const auto it = object.find(key);
  if (it == object.end()) return fallback;
  if (!it->is_string()) {
    throw ValidationError("config key \"" + scope + key + "\" must be a string");
  }
  return it->get<std::string>();
}

// Times one pipeline stage and tags any error with the stage name so
// failures read "stage pagerank: ...".
template <typename Fn>
auto timed_stage(const char* name, std::vector<StageTiming>* timings, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  const auto record = [timings, name, start] {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    timings->push_back({name, elapsed.count()});
  };
  try {
    if constexpr (std::is_void_v<std::invoke_result_t<Fn>>) {
      fn();
      record();
    } else {
      auto result = fn();
      record();
      return result;
    }
  } catch (const ValidationError& e) {
    throw ValidationError("stage " + std::string(name) + ": " + e.what());
  } catch (const IoError& e) {
    throw IoError("stage " + std::string(name) + ": " + e.what());
  }
}

ordered_json histogram_to_json(const std::map<int, int>& histogram) {
  ordered_json out = ordered_json::object();
  for (const auto& [degree, count] : histogram) {
    out[std::to_string(degree)] = count;
  }
  return out;
}

ordered_json stats_to_json(const SnapshotResult& result, int cluster_count) {
  ordered_json stats;
  stats["snapshot_time"] = format_rfc3339(result.snapshot_time);
  stats["articles"] = result.records.size();
  stats["rejects"] = result.rejects.size();
  ordered_json graph;
  graph["vertices"] = result.stats.vertices;
  graph["edges"] = result.stats.edges;
  graph["dangling"] = result.stats.dangling;
  graph["dropped_self"] = result.stats.dropped_self;
  graph["dropped_same_publisher"] = result.stats.dropped_same_publisher;
  graph["dropped_external"] = result.stats.dropped_external;
  graph["dropped_duplicate"] = result.stats.dropped_duplicate;
  graph["dropped_blocked"] = result.stats.dropped_blocked;
  graph["excluded_isolated"] = result.stats.excluded_isolated;
  graph["in_degree_histogram"] = histogram_to_json(result.stats.in_degree_histogram);
  graph["out_degree_histogram"] = histogram_to_json(result.stats.out_degree_histogram);
  stats["graph"] = graph;
  stats["clusters"] = cluster_count;
  return stats;
}

}  // namespace

PipelineConfig PipelineConfig::from_json_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("config must be a JSON object");
  check_keys(root,
             {"window_days", "pagerank", "embedding", "knn", "split", "local", "alpha", "theta",
              "p", "blocklist", "canonical_map"},
             "");

  PipelineConfig config;
  config.window_days = get_int(root, "window_days", config.window_days, "");

  if (const auto it = root.find("pagerank"); it != root.end()) {
    if (!it->is_object()) throw ValidationError("config key \"pagerank\" must be an object");
    check_keys(*it, {"damping", "tolerance", "max_iterations"}, "pagerank.");
    config.pagerank.damping =
        get_number(*it, "damping", config.pagerank.damping, "pagerank.");
    config.pagerank.tolerance =
        get_number(*it, "tolerance", config.pagerank.tolerance, "pagerank.");
    config.pagerank.max_iterations =
        get_int(*it, "max_iterations", config.pagerank.max_iterations, "pagerank.");
  }

  if (const auto it = root.find("embedding"); it != root.end()) {
    if (!it->is_object()) throw ValidationError("config key \"embedding\" must be an object");
    check_keys(*it, {"provider", "dimension", "vectors_path"}, "embedding.");
    config.embedding_provider =
        get_string(*it, "provider", config.embedding_provider, "embedding.");
    config.cluster.embed_dimension =
        get_int(*it, "dimension", config.cluster.embed_dimension, "embedding.");
    config.vectors_path = get_string(*it, "vectors_path", config.vectors_path, "embedding.");
  }

  if (const auto it = root.find("knn"); it != root.end()) {
    if (!it->is_object()) throw ValidationError("config key \"knn\" must be an object");
    check_keys(*it, {"k", "min_similarity"}, "knn.");
    config.cluster.knn_k = get_int(*it, "k", config.cluster.knn_k, "knn.");
    config.cluster.min_similarity =
        get_number(*it, "min_similarity", config.cluster.min_similarity, "knn.");
  }

  if (const auto it = root.find("split"); it != root.end()) {
    if (!it->is_object()) throw ValidationError("config key \"split\" must be an object");
    check_keys(*it, {"max_size", "epsilon", "weight_lo", "weight_hi"}, "split.");
    SplitParams& split = config.cluster.split;
    split.max_size = get_int(*it, "max_size", split.max_size, "split.");
    split.epsilon = get_number(*it, "epsilon", split.epsilon, "split.");
    split.weight_lo = get_number(*it, "weight_lo", split.weight_lo, "split.");
    split.weight_hi = get_number(*it, "weight_hi", split.weight_hi, "split.");
  }

  if (const auto it = root.find("local"); it != root.end()) {
    if (!it->is_object()) throw ValidationError("config key \"local\" must be an object");
    check_keys(*it, {"missing_edge_weight", "restarts", "seed"}, "local.");
    LocalParams& local = config.cluster.local;
    local.missing_edge_weight =
        get_number(*it, "missing_edge_weight", local.missing_edge_weight, "local.");
    local.restarts = get_int(*it, "restarts", local.restarts, "local.");
    local.seed = get_seed(*it, "seed", local.seed, "local.");
  }

  if (const auto it = root.find("alpha"); it != root.end()) {
    if (!it->is_object()) throw ValidationError("config key \"alpha\" must be an object");
    check_keys(*it, {"comment", "share", "like", "click_original"}, "alpha.");
    config.weights.comment = get_number(*it, "comment", config.weights.comment, "alpha.");
    config.weights.share = get_number(*it, "share", config.weights.share, "alpha.");
    config.weights.like = get_number(*it, "like", config.weights.like, "alpha.");
    config.weights.click_original =
        get_number(*it, "click_original", config.weights.click_original, "alpha.");
  }

  config.score.theta = get_number(root, "theta", config.score.theta, "");
  config.score.p = get_number(root, "p", config.score.p, "");
  config.blocklist_path = get_string(root, "blocklist", config.blocklist_path, "");
  config.canonical_map_path = get_string(root, "canonical_map", config.canonical_map_path, "");

  config.validate();
  return config;
}

PipelineConfig PipelineConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_json_text(text);
}

std::string PipelineConfig::to_json_text() const {
  ordered_json root;
  root["window_days"] = window_days;
  root["pagerank"] = {{"damping", pagerank.damping},
                      {"tolerance", pagerank.tolerance},
                      {"max_iterations", pagerank.max_iterations}};
  root["embedding"] = {{"provider", embedding_provider},
                       {"dimension", cluster.embed_dimension},
                       {"vectors_path", vectors_path}};
  root["knn"] = {{"k", cluster.knn_k}, {"min_similarity", cluster.min_similarity}};
  root["split"] = {{"max_size", cluster.split.max_size},
                   {"epsilon", cluster.split.epsilon},
                   {"weight_lo", cluster.split.weight_lo},
                   {"weight_hi", cluster.split.weight_hi}};
  root["local"] = {{"missing_edge_weight", cluster.local.missing_edge_weight},
                   {"restarts", cluster.local.restarts},
                   {"seed", cluster.local.seed}};
  root["alpha"] = {{"comment", weights.comment},
                   {"share", weights.share},
                   {"like", weights.like},
                   {"click_original", weights.click_original}};
  root["theta"] = score.theta;
  root["p"] = score.p;
  root["blocklist"] = blocklist_path;
  root["canonical_map"] = canonical_map_path;
  return root.dump(2) + "\n";
}

void PipelineConfig::validate() const {
  if (window_days < 1) throw ValidationError("window_days must be >= 1");
  if (!(pagerank.damping > 0.0 && pagerank.damping < 1.0)) {
    throw ValidationError("pagerank.damping must lie in (0, 1)");
  }
  if (!(pagerank.tolerance > 0.0)) throw ValidationError("pagerank.tolerance must be positive");
  if (pagerank.max_iterations < 1) {
    throw ValidationError("pagerank.max_iterations must be >= 1");
  }
  if (embedding_provider != "feature_hash" && embedding_provider != "precomputed") {
    throw ValidationError("embedding.provider must be \"feature_hash\" or \"precomputed\"");
  }
  if (embedding_provider == "precomputed" && vectors_path.empty()) {
    throw ValidationError("embedding.vectors_path is required for the precomputed provider");
  }
  if (cluster.embed_dimension < 1) throw ValidationError("embedding.dimension must be >= 1");
  if (cluster.knn_k < 1) throw ValidationError("knn.k must be >= 1");
  if (cluster.split.max_size < 1) throw ValidationError("split.max_size must be >= 1");
  if (!(cluster.split.epsilon > 0.0)) throw ValidationError("split.epsilon must be positive");
  if (!(cluster.split.weight_lo < cluster.split.weight_hi)) {
    throw ValidationError("split weight range must satisfy weight_lo < weight_hi");
  }
  if (!(cluster.local.missing_edge_weight < 0.0)) {
    throw ValidationError("local.missing_edge_weight must be negative");
  }
  if (cluster.local.restarts < 1) throw ValidationError("local.restarts must be >= 1");
  if (!(score.p > 0.0)) throw ValidationError("p must be positive");
  if (!(score.theta > 0.0 && score.theta < 1.0)) {
    throw ValidationError("theta must lie strictly inside (0, 1)");
  }
}

SnapshotResult run_snapshot(const std::string& corpus_path, const PipelineConfig& config,
                            std::int64_t snapshot_time, const std::string& output_root) {
  config.validate();
  SnapshotResult result;
  result.snapshot_time = snapshot_time;
  std::vector<StageTiming>* timings = &result.timings;

  const LoadResult loaded = timed_stage("load", timings, [&] {
    LoadOptions options;
    if (!config.canonical_map_path.empty()) {
      options.canonical_map = CanonicalMap::load_tsv(config.canonical_map_path);
    }
    return load_corpus(corpus_path, snapshot_time, config.window_days, options);
  });
  result.rejects = loaded.rejects;
  const CorpusSnapshot& corpus = loaded.corpus;

  const CitationGraph graph = timed_stage("graph", timings, [&] {
    GraphBuildOptions options;
    if (!config.blocklist_path.empty()) {
      options.blocked_publishers = load_blocklist(config.blocklist_path);
    }
    return build_graph(corpus, options);
  });
  result.stats = graph_stats(graph);

  const PageRankResult ranks = timed_stage("pagerank", timings, [&] {
    // An empty graph is legal for the pipeline (empty corpora must
    // succeed); the kernel itself treats it as an error.
    return graph.vertex_count() == 0 ? PageRankResult{} : pagerank(graph, config.pagerank);
  });

  const ClusterAssignment assignment = timed_stage("cluster", timings, [&] {
    std::vector<std::pair<std::string, std::string>> id_titles;
    id_titles.reserve(corpus.articles.size());
    for (const Article& article : corpus.articles) {
      id_titles.emplace_back(article.id, article.title);
    }
    std::unique_ptr<EmbeddingProvider> provider;
    if (config.embedding_provider == "precomputed") {
      provider = std::make_unique<PrecomputedProvider>(
          PrecomputedProvider::load_jsonl(config.vectors_path));
    } else {
      provider = std::make_unique<FeatureHashProvider>(config.cluster.embed_dimension);
    }
    return three_step_cluster(id_titles, *provider, config.cluster);
  });

  result.records = timed_stage("score", timings, [&] {
    const std::size_t n = corpus.articles.size();
    std::vector<std::string> ids(n);
    std::vector<double> scores(n, 0.0);
    std::vector<bool> in_graph(n, false);
    std::vector<int> clusters(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      ids[i] = corpus.articles[i].id;
      const auto vertex = graph.id_index.find(ids[i]);
      if (vertex != graph.id_index.end()) {
        scores[i] = ranks.scores[vertex->second];
        in_graph[i] = true;
      }
      clusters[i] = assignment.labels.at(ids[i]);
    }
    return build_originality_records(ids, scores, in_graph, clusters, config.score);
  });

  if (!output_root.empty()) {
    timed_stage("write", timings, [&] {
      const std::string name = format_timestamp_compact(snapshot_time);
      const fs::path root(output_root);
      const fs::path final_dir = root / name;
      const fs::path tmp_dir = root / (".tmp-" + name);
      try {
        fs::create_directories(root);
        fs::remove_all(tmp_dir);
        fs::create_directory(tmp_dir);

        write_edges_tsv(graph, (tmp_dir / "graph.tsv").string());
        write_pagerank_jsonl(graph, ranks.scores, (tmp_dir / "pagerank.jsonl").string());
        std::vector<std::string> ids;
        ids.reserve(corpus.articles.size());
        for (const Article& article : corpus.articles) ids.push_back(article.id);
        write_clusters_jsonl(assignment, ids, (tmp_dir / "clusters.jsonl").string());
        write_scores_jsonl(result.records, (tmp_dir / "scores.jsonl").string());

        std::ofstream stats((tmp_dir / "stats.json").string(), std::ios::binary);
        if (!stats) throw IoError("cannot write stats.json");
        stats << stats_to_json(result, assignment.cluster_count).dump(2) << '\n';
        if (!stats) throw IoError("error while writing stats.json");
        stats.close();

        // Stage into place: a failed run leaves no partial snapshot
        // directory behind, and a re-run replaces the tick wholesale.
        fs::remove_all(final_dir);
        fs::rename(tmp_dir, final_dir);
      } catch (...) {
        std::error_code ignored;
        fs::remove_all(tmp_dir, ignored);
        throw;
      }
      result.output_dir = final_dir.string();
    });
  }
  return result;
}

std::vector<SeriesTick> run_series(const std::string& corpus_path, const PipelineConfig& config,
                                   std::int64_t start_time, std::int64_t end_time,
                                   std::int64_t interval_seconds,
                                   const std::string& output_root) {
  if (start_time > end_time) throw ValidationError("series start must not be after end");
  if (interval_seconds <= 0) throw ValidationError("series interval must be positive");

  std::vector<SeriesTick> ticks;
  for (std::int64_t t = start_time; t <= end_time; t += interval_seconds) {
    SeriesTick tick;
    tick.snapshot_time = t;
    try {
      tick.result = run_snapshot(corpus_path, config, t, output_root);
      tick.ok = true;
    } catch (const std::exception& e) {
      tick.ok = false;
      tick.error = e.what();
    }
    ticks.push_back(std::move(tick));
  }

  if (!output_root.empty()) {
    // When every tick fails no snapshot directory was created, so the root
    // may not exist yet.
    std::error_code ec;
    fs::create_directories(output_root, ec);
    const fs::path series_path = fs::path(output_root) / "series.jsonl";
    std::ofstream out(series_path.string(), std::ios::binary);
    if (!out) throw IoError("cannot write series file: " + series_path.string());
    for (const SeriesTick& tick : ticks) {
      if (!tick.ok) continue;
      for (const OriginalityRecord& record : tick.result.records) {
        ordered_json row;
        row["id"] = record.id;
        row["snapshot_time"] = format_rfc3339(tick.snapshot_time);
        row["p_original"] = record.p_original;
        out << row.dump() << '\n';
      }
    }
    if (!out) throw IoError("error while writing series file: " + series_path.string());
  }
  return ticks;
}

}  // namespace newsrank
