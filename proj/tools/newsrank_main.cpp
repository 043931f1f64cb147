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

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <newsrank/citation.hpp>
#include <newsrank/cluster.hpp>
#include <newsrank/corpus.hpp>
#include <newsrank/embed.hpp>
#include <newsrank/error.hpp>
#include <newsrank/eval.hpp>
#include <newsrank/pagerank.hpp>
#include <newsrank/pipeline.hpp>
#include <newsrank/score.hpp>
#include <newsrank/synth.hpp>
#include <newsrank/text.hpp>
#include <newsrank/timeutil.hpp>

namespace {

using newsrank::IoError;
using newsrank::ValidationError;
using ordered_json = nlohmann::ordered_json;

// Flags shared by every subcommand that reads an articles file.
struct CorpusFlags {
  std::string articles;
  std::string snapshot_time;
  int window_days = 7;
  std::string canonical_map;

  void attach(CLI::App* cmd) {
    cmd->add_option("--articles", articles, "Articles JSONL input")->required();
    cmd->add_option("--snapshot-time", snapshot_time, "Snapshot instant, RFC 3339 UTC")
        ->required();
    cmd->add_option("--window-days", window_days, "Trailing window length in days")
        ->capture_default_str();
    cmd->add_option("--canonical-map", canonical_map, "URL canonical-map TSV");
  }

  newsrank::LoadResult load() const {
    newsrank::LoadOptions options;
    if (!canonical_map.empty()) {
      options.canonical_map = newsrank::CanonicalMap::load_tsv(canonical_map);
    }
    return newsrank::load_corpus(articles, newsrank::parse_rfc3339(snapshot_time), window_days,
                                 options);
  }
};

// Reads {"id", "pagerank"} JSONL into a map, for composing `score` from
// previously written stage artifacts.
std::unordered_map<std::string, double> load_pagerank_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open pagerank file: " + path);
  std::unordered_map<std::string, double> scores;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ordered_json row;
    try {
      row = ordered_json::parse(line);
    } catch (const ordered_json::parse_error& e) {
      throw ValidationError("pagerank file " + path + " line " + std::to_string(lineno) + ": " +
                            e.what());
    }
    if (!row.is_object() || !row.contains("id") || !row["id"].is_string() ||
        !row.contains("pagerank") || !row["pagerank"].is_number()) {
      throw ValidationError("pagerank file " + path + " line " + std::to_string(lineno) +
                            ": expected {\"id\": str, \"pagerank\": number}");
    }
    if (!scores.emplace(row["id"].get<std::string>(), row["pagerank"].get<double>()).second) {
      throw ValidationError("pagerank file " + path + ": duplicate id \"" +
                            row["id"].get<std::string>() + "\"");
    }
  }
  return scores;
}

// Pulls just id and title out of an articles file; `eval auc` needs the
// text but none of the window or URL machinery.
std::unordered_map<std::string, std::string> load_id_titles(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open articles file: " + path);
  std::unordered_map<std::string, std::string> titles;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ordered_json row;
    try {
      row = ordered_json::parse(line);
    } catch (const ordered_json::parse_error& e) {
      throw ValidationError("articles file " + path + " line " + std::to_string(lineno) + ": " +
                            e.what());
    }
    if (!row.is_object() || !row.contains("id") || !row["id"].is_string() ||
        !row.contains("title") || !row["title"].is_string()) {
      throw ValidationError("articles file " + path + " line " + std::to_string(lineno) +
                            ": expected {\"id\": str, \"title\": str, ...}");
    }
    titles[row["id"].get<std::string>()] = row["title"].get<std::string>();
  }
  return titles;
}

std::unique_ptr<newsrank::EmbeddingProvider> make_provider(const std::string& vectors_path,
                                                           int dimension) {
  if (!vectors_path.empty()) {
    return std::make_unique<newsrank::PrecomputedProvider>(
        newsrank::PrecomputedProvider::load_jsonl(vectors_path));
  }
  return std::make_unique<newsrank::FeatureHashProvider>(dimension);
}

void print_timings(const std::vector<newsrank::StageTiming>& timings) {
  for (const newsrank::StageTiming& timing : timings) {
    std::cerr << "stage " << timing.stage << ": " << std::fixed << std::setprecision(3)
              << timing.seconds << "s\n";
  }
  std::cerr.unsetf(std::ios::floatfield);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Citation-graph originality scoring for news corpora"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  const auto add_cmd = [&app](const std::string& name, const std::string& description) {
    CLI::App* cmd = app.add_subcommand(name, description);
    cmd->failure_message(CLI::FailureMessage::help);
    return cmd;
  };

  // --- ingest ---------------------------------------------------------
  CLI::App* ingest = add_cmd("ingest", "Validate, canonicalize and window-filter articles");
  CorpusFlags ingest_corpus;
  ingest_corpus.attach(ingest);
  std::string ingest_output;
  std::string ingest_rejects;
  ingest->add_option("--output", ingest_output, "Accepted articles JSONL")->required();
  ingest->add_option("--rejects", ingest_rejects, "Rejects report JSONL");
  ingest->callback([&] {
    const newsrank::LoadResult loaded = ingest_corpus.load();
    std::ofstream out(ingest_output, std::ios::binary);
    if (!out) throw IoError("cannot write output file: " + ingest_output);
    for (const newsrank::Article& article : loaded.corpus.articles) {
      ordered_json row;
      row["id"] = article.id;
      row["url"] = article.url;
      row["canonical_url"] = article.canonical_url;
      row["title"] = article.title;
      row["publisher"] = article.publisher;
      row["published_at"] = newsrank::format_rfc3339(article.published_at);
      if (!article.links.empty()) row["links"] = article.links;
      out << row.dump() << '\n';
    }
    if (!out) throw IoError("error while writing output file: " + ingest_output);
    if (!ingest_rejects.empty()) {
      std::ofstream rejects(ingest_rejects, std::ios::binary);
      if (!rejects) throw IoError("cannot write rejects file: " + ingest_rejects);
      for (const newsrank::RejectRecord& reject : loaded.rejects) {
        ordered_json row;
        row["line"] = reject.line;
        row["reason"] = reject.reason;
        rejects << row.dump() << '\n';
      }
      if (!rejects) throw IoError("error while writing rejects file: " + ingest_rejects);
    }
    std::cerr << "ingest: " << loaded.corpus.articles.size() << " accepted, "
              << loaded.rejects.size() << " rejected\n";
  });

  // --- graph ----------------------------------------------------------
  CLI::App* graph_cmd = add_cmd("graph", "Build the cross-publisher citation graph");
  CorpusFlags graph_corpus;
  graph_corpus.attach(graph_cmd);
  std::string graph_blocklist;
  std::string graph_output;
  graph_cmd->add_option("--blocklist", graph_blocklist, "Blocked publishers, one per line");
  graph_cmd->add_option("--output", graph_output, "Edge list TSV")->required();
  graph_cmd->callback([&] {
    const newsrank::LoadResult loaded = graph_corpus.load();
    newsrank::GraphBuildOptions options;
    if (!graph_blocklist.empty()) {
      options.blocked_publishers = newsrank::load_blocklist(graph_blocklist);
    }
    const newsrank::CitationGraph graph = newsrank::build_graph(loaded.corpus, options);
    newsrank::write_edges_tsv(graph, graph_output);
    std::cerr << "graph: " << graph.vertex_count() << " vertices, " << graph.edge_count()
              << " edges (dropped: " << graph.dropped_self << " self, "
              << graph.dropped_same_publisher << " same-publisher, " << graph.dropped_external
              << " external, " << graph.dropped_duplicate << " duplicate, "
              << graph.dropped_blocked << " blocked; " << graph.excluded_isolated
              << " isolated excluded)\n";
  });

  // --- pagerank -------------------------------------------------------
  CLI::App* pagerank_cmd = add_cmd("pagerank", "Run power iteration over an edge list");
  std::string pagerank_graph;
  std::string pagerank_output;
  newsrank::PageRankParams pagerank_params;
  bool pagerank_serial = false;
  pagerank_cmd->add_option("--graph", pagerank_graph, "Edge list TSV input")->required();
  pagerank_cmd->add_option("--output", pagerank_output, "PageRank JSONL")->required();
  pagerank_cmd->add_option("--damping", pagerank_params.damping, "Damping factor d")->capture_default_str();
  pagerank_cmd->add_option("--tolerance", pagerank_params.tolerance, "L1 convergence tolerance")->capture_default_str();
  pagerank_cmd->add_option("--max-iterations", pagerank_params.max_iterations,
                           "Iteration cap")->capture_default_str();
  pagerank_cmd->add_flag("--serial", pagerank_serial, "Use the serial reference kernel");
  pagerank_cmd->callback([&] {
    const newsrank::CitationGraph graph = newsrank::load_edges_tsv(pagerank_graph);
    const newsrank::PageRankResult result =
        pagerank_serial ? newsrank::pagerank_serial(graph, pagerank_params)
                        : newsrank::pagerank(graph, pagerank_params);
    newsrank::write_pagerank_jsonl(graph, result.scores, pagerank_output);
    std::cerr << "pagerank: " << result.iterations << " iterations, residual "
              << result.residual << (result.converged ? "" : " (not converged)") << '\n';
  });

  // --- cluster --------------------------------------------------------
  CLI::App* cluster_cmd = add_cmd("cluster", "Group near-duplicate stories by title");
  CorpusFlags cluster_corpus;
  cluster_corpus.attach(cluster_cmd);
  std::string cluster_output;
  std::string cluster_vectors;
  newsrank::ClusterParams cluster_params;
  cluster_cmd->add_option("--output", cluster_output, "Cluster assignment JSONL")->required();
  cluster_cmd->add_option("--vectors", cluster_vectors,
                          "Precomputed embedding JSONL (default: feature hashing)");
  cluster_cmd->add_option("--dimension", cluster_params.embed_dimension,
                          "Feature-hash dimension")->capture_default_str();
  cluster_cmd->add_option("--k", cluster_params.knn_k, "Nearest neighbors per article")->capture_default_str();
  cluster_cmd->add_option("--min-similarity", cluster_params.min_similarity,
                          "Minimum cosine similarity for graph edges")->capture_default_str();
  cluster_cmd->add_option("--max-size", cluster_params.split.max_size,
                          "Single-worker subgraph size bound")->capture_default_str();
  cluster_cmd->add_option("--epsilon", cluster_params.split.epsilon,
                          "Threshold-search termination width")->capture_default_str();
  cluster_cmd->add_option("--omega", cluster_params.local.missing_edge_weight,
                          "Missing-edge penalty (negative)")->capture_default_str();
  cluster_cmd->add_option("--restarts", cluster_params.local.restarts,
                          "Randomized greedy passes")->capture_default_str();
  cluster_cmd->add_option("--seed", cluster_params.local.seed, "Clustering RNG seed")->capture_default_str();
  cluster_cmd->callback([&] {
    const newsrank::LoadResult loaded = cluster_corpus.load();
    std::vector<std::pair<std::string, std::string>> id_titles;
    std::vector<std::string> ids;
    id_titles.reserve(loaded.corpus.articles.size());
    ids.reserve(loaded.corpus.articles.size());
    for (const newsrank::Article& article : loaded.corpus.articles) {
      id_titles.emplace_back(article.id, article.title);
      ids.push_back(article.id);
    }
    const std::unique_ptr<newsrank::EmbeddingProvider> provider =
        make_provider(cluster_vectors, cluster_params.embed_dimension);
    const newsrank::ClusterAssignment assignment =
        newsrank::three_step_cluster(id_titles, *provider, cluster_params);
    newsrank::write_clusters_jsonl(assignment, ids, cluster_output);
    std::cerr << "cluster: " << ids.size() << " articles -> " << assignment.cluster_count
              << " clusters\n";
  });

  // --- score ----------------------------------------------------------
  CLI::App* score_cmd = add_cmd("score", "Normalize PageRank within clusters");
  std::string score_pagerank;
  std::string score_clusters;
  std::string score_output;
  newsrank::ScoreParams score_params;
  score_cmd->add_option("--pagerank", score_pagerank, "PageRank JSONL input")->required();
  score_cmd->add_option("--clusters", score_clusters, "Cluster assignment JSONL input")
      ->required();
  score_cmd->add_option("--output", score_output, "Originality scores JSONL")->required();
  score_cmd->add_option("--theta", score_params.theta, "Promotion threshold θ")->capture_default_str();
  score_cmd->add_option("--p", score_params.p, "Normalization exponent p")->capture_default_str();
  score_cmd->callback([&] {
    std::vector<std::string> ids;
    const newsrank::ClusterAssignment assignment =
        newsrank::load_clusters_jsonl(score_clusters, &ids);
    const std::unordered_map<std::string, double> pagerank = load_pagerank_map(score_pagerank);
    std::vector<double> scores(ids.size(), 0.0);
    std::vector<bool> in_graph(ids.size(), false);
    std::vector<int> labels(ids.size(), 0);
    std::size_t cited = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const auto it = pagerank.find(ids[i]);
      if (it != pagerank.end()) {
        scores[i] = it->second;
        in_graph[i] = true;
        ++cited;
      }
      labels[i] = assignment.labels.at(ids[i]);
    }
    const std::vector<newsrank::OriginalityRecord> records =
        newsrank::build_originality_records(ids, scores, in_graph, labels, score_params);
    newsrank::write_scores_jsonl(records, score_output);
    std::cerr << "score: " << records.size() << " records, " << cited << " in graph\n";
  });

  // --- run ------------------------------------------------------------
  CLI::App* run_cmd = add_cmd("run", "Execute a full snapshot and write its artifacts");
  std::string run_articles;
  std::string run_snapshot_time;
  std::string run_config;
  std::string run_output = ".";
  std::uint64_t run_seed = 0;
  run_cmd->add_option("--articles", run_articles, "Articles JSONL input")->required();
  run_cmd->add_option("--snapshot-time", run_snapshot_time, "Snapshot instant, RFC 3339 UTC")
      ->required();
  run_cmd->add_option("--config", run_config, "Pipeline configuration JSON");
  run_cmd->add_option("--output", run_output, "Output root directory")->capture_default_str();
  CLI::Option* run_seed_opt =
      run_cmd->add_option("--seed", run_seed, "Override the clustering RNG seed");
  run_cmd->callback([&] {
    newsrank::PipelineConfig config = run_config.empty()
                                          ? newsrank::PipelineConfig{}
                                          : newsrank::PipelineConfig::from_json_file(run_config);
    if (run_seed_opt->count() > 0) config.cluster.local.seed = run_seed;
    const newsrank::SnapshotResult result = newsrank::run_snapshot(
        run_articles, config, newsrank::parse_rfc3339(run_snapshot_time), run_output);
    print_timings(result.timings);
    std::cerr << "snapshot " << newsrank::format_rfc3339(result.snapshot_time) << ": "
              << result.records.size() << " articles, " << result.stats.vertices
              << " vertices, " << result.stats.edges << " edges\n";
    std::cout << result.output_dir << '\n';
  });

  // --- series ---------------------------------------------------------
  CLI::App* series_cmd = add_cmd("series", "Replay snapshots over a time range");
  std::string series_articles;
  std::string series_config;
  std::string series_start;
  std::string series_end;
  std::int64_t series_interval = 3600;
  std::string series_output = ".";
  std::uint64_t series_seed = 0;
  series_cmd->add_option("--articles", series_articles, "Articles JSONL input")->required();
  series_cmd->add_option("--start", series_start, "First snapshot, RFC 3339 UTC")->required();
  series_cmd->add_option("--end", series_end, "Last snapshot, RFC 3339 UTC")->required();
  series_cmd->add_option("--interval", series_interval, "Tick spacing in seconds")->capture_default_str();
  series_cmd->add_option("--config", series_config, "Pipeline configuration JSON");
  series_cmd->add_option("--output", series_output, "Output root directory")->capture_default_str();
  CLI::Option* series_seed_opt =
      series_cmd->add_option("--seed", series_seed, "Override the clustering RNG seed");
  series_cmd->callback([&] {
    newsrank::PipelineConfig config =
        series_config.empty() ? newsrank::PipelineConfig{}
                              : newsrank::PipelineConfig::from_json_file(series_config);
    if (series_seed_opt->count() > 0) config.cluster.local.seed = series_seed;
    const std::vector<newsrank::SeriesTick> ticks = newsrank::run_series(
        series_articles, config, newsrank::parse_rfc3339(series_start),
        newsrank::parse_rfc3339(series_end), series_interval, series_output);
    std::size_t failed = 0;
    for (const newsrank::SeriesTick& tick : ticks) {
      if (tick.ok) {
        std::cerr << "tick " << newsrank::format_rfc3339(tick.snapshot_time) << ": "
                  << tick.result.records.size() << " articles\n";
      } else {
        ++failed;
        std::cerr << "tick " << newsrank::format_rfc3339(tick.snapshot_time)
                  << ": error: " << tick.error << '\n';
      }
    }
    std::cout << ticks.size() - failed << " ok, " << failed << " failed\n";
  });

  // --- eval -----------------------------------------------------------
  CLI::App* eval_cmd = add_cmd("eval", "Evaluation metrics over labeled data");
  eval_cmd->require_subcommand(1);

  CLI::App* auc_cmd = eval_cmd->add_subcommand("auc", "Pairwise AUC of title similarity");
  auc_cmd->failure_message(CLI::FailureMessage::help);
  std::string auc_pairs;
  std::string auc_articles;
  std::string auc_vectors;
  int auc_dimension = 128;
  double auc_binarize = 1.5;
  auc_cmd->add_option("--pairs", auc_pairs, "Labeled pairs TSV")->required();
  auc_cmd->add_option("--articles", auc_articles, "Articles JSONL with titles")->required();
  auc_cmd->add_option("--vectors", auc_vectors,
                      "Precomputed embedding JSONL (default: feature hashing)");
  auc_cmd->add_option("--dimension", auc_dimension, "Feature-hash dimension")->capture_default_str();
  auc_cmd->add_option("--binarize", auc_binarize, "Label binarization point")->capture_default_str();
  auc_cmd->callback([&] {
    const std::vector<newsrank::LabeledPair> pairs = newsrank::load_pairs_tsv(auc_pairs);
    const std::unordered_map<std::string, std::string> titles = load_id_titles(auc_articles);
    const std::unique_ptr<newsrank::EmbeddingProvider> provider =
        make_provider(auc_vectors, auc_dimension);

    std::vector<std::string> keys;
    std::unordered_map<std::string, std::size_t> key_index;
    const auto key_of = [&](const std::string& id) {
      const auto it = titles.find(id);
      if (it == titles.end()) {
        throw ValidationError("pair references unknown id \"" + id + "\"");
      }
      const std::string key = newsrank::normalize_title(it->second);
      if (key_index.emplace(key, keys.size()).second) keys.push_back(key);
      return key_index[key];
    };
    std::vector<std::pair<std::size_t, std::size_t>> pair_keys;
    pair_keys.reserve(pairs.size());
    for (const newsrank::LabeledPair& pair : pairs) {
      pair_keys.emplace_back(key_of(pair.id_a), key_of(pair.id_b));
    }
    std::vector<newsrank::EmbeddingVector> vectors;
    provider->embed_batch(keys, &vectors);

    std::vector<std::pair<newsrank::LabeledPair, double>> scored;
    scored.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      scored.emplace_back(pairs[i], newsrank::cosine_similarity(vectors[pair_keys[i].first],
                                                                vectors[pair_keys[i].second]));
    }
    const double auc = newsrank::pairwise_auc(scored, auc_binarize);
    ordered_json report;
    report["pairs"] = pairs.size();
    report["binarize_at"] = auc_binarize;
    report["auc"] = auc;
    std::cout << report.dump(2) << '\n';
  });

  CLI::App* pr_cmd = eval_cmd->add_subcommand("pr", "Clustering precision/recall");
  pr_cmd->failure_message(CLI::FailureMessage::help);
  std::string pr_pairs;
  std::string pr_clusters;
  newsrank::PrOptions pr_options;
  pr_cmd->add_option("--pairs", pr_pairs, "Labeled pairs TSV")->required();
  pr_cmd->add_option("--clusters", pr_clusters, "Cluster assignment JSONL")->required();
  pr_cmd->add_option("--positive-at", pr_options.positive_at,
                     "Labels strictly above count as same-story")->capture_default_str();
  pr_cmd->callback([&] {
    const std::vector<newsrank::LabeledPair> pairs = newsrank::load_pairs_tsv(pr_pairs);
    const newsrank::ClusterAssignment assignment = newsrank::load_clusters_jsonl(pr_clusters);
    const newsrank::PrResult result =
        newsrank::clustering_precision_recall(pairs, assignment.labels, pr_options);
    ordered_json report;
    report["pairs"] = pairs.size();
    report["positive_at"] = pr_options.positive_at;
    report["true_positive"] = result.true_positive;
    report["false_positive"] = result.false_positive;
    report["false_negative"] = result.false_negative;
    report["precision"] = result.precision ? ordered_json(*result.precision) : ordered_json();
    report["recall"] = result.recall ? ordered_json(*result.recall) : ordered_json();
    std::cout << report.dump(2) << '\n';
  });

  CLI::App* lift_cmd = eval_cmd->add_subcommand("lift", "View share of promoted articles");
  lift_cmd->failure_message(CLI::FailureMessage::help);
  std::string lift_scores;
  std::string lift_graph;
  std::vector<double> lift_thresholds = {0.4, 0.5, 0.6, 0.7, 0.8};
  lift_cmd->add_option("--scores", lift_scores, "Originality scores JSONL")->required();
  lift_cmd->add_option("--graph", lift_graph, "Edge list TSV for the view model")->required();
  lift_cmd->add_option("--thresholds", lift_thresholds, "Ascending promotion thresholds")
      ->delimiter(',');
  lift_cmd->callback([&] {
    const std::vector<newsrank::OriginalityRecord> records =
        newsrank::load_scores_jsonl(lift_scores);
    const newsrank::CitationGraph graph = newsrank::load_edges_tsv(lift_graph);
    const std::vector<newsrank::LiftRow> rows =
        newsrank::lift_table(records, newsrank::views_from_in_degree(graph), lift_thresholds);
    ordered_json report;
    report["articles"] = records.size();
    report["rows"] = ordered_json::array();
    for (const newsrank::LiftRow& row : rows) {
      ordered_json entry;
      entry["threshold"] = row.threshold;
      entry["promoted"] = row.promoted;
      entry["view_share"] = row.view_share;
      report["rows"].push_back(entry);
    }
    std::cout << report.dump(2) << '\n';
  });

  // --- synth ----------------------------------------------------------
  CLI::App* synth_cmd = add_cmd("synth", "Generate a labeled synthetic corpus");
  newsrank::SynthParams synth_params;
  std::string synth_snapshot_time = "2026-01-01T00:00:00Z";
  std::string synth_articles;
  std::string synth_truth;
  std::string synth_edges;
  synth_cmd->add_option("--articles", synth_articles, "Articles JSONL output")->required();
  synth_cmd->add_option("--truth", synth_truth, "Event/original truth TSV output")->required();
  synth_cmd->add_option("--edges", synth_edges, "Intended citation edges TSV output");
  synth_cmd->add_option("--events", synth_params.events, "Number of story events")->capture_default_str();
  synth_cmd->add_option("--followers", synth_params.followers_per_event,
                        "Follower articles per event")->capture_default_str();
  synth_cmd->add_option("--publishers", synth_params.publishers, "Publisher pool size")->capture_default_str();
  synth_cmd->add_option("--noise", synth_params.noise_edges,
                        "Total cross-event noise citations")->capture_default_str();
  synth_cmd->add_option("--seed", synth_params.seed, "Generator RNG seed")->capture_default_str();
  synth_cmd->add_option("--snapshot-time", synth_snapshot_time,
                        "Snapshot the corpus targets, RFC 3339 UTC")->capture_default_str();
  synth_cmd->add_option("--window-days", synth_params.window_days,
                        "Window the corpus targets in days")->capture_default_str();
  synth_cmd->callback([&] {
    synth_params.snapshot_time = newsrank::parse_rfc3339(synth_snapshot_time);
    const newsrank::SyntheticCorpus synth = newsrank::generate_synthetic_corpus(synth_params);
    newsrank::write_synthetic_corpus(synth, synth_articles, synth_truth);
    if (!synth_edges.empty()) {
      std::ofstream out(synth_edges, std::ios::binary);
      if (!out) throw IoError("cannot write edges file: " + synth_edges);
      for (const auto& [citing, cited] : synth.edges) {
        out << citing << '\t' << cited << '\n';
      }
      if (!out) throw IoError("error while writing edges file: " + synth_edges);
    }
    std::cerr << "synth: " << synth.corpus.articles.size() << " articles, "
              << synth.edges.size() << " citation edges\n";
  });

  // --- config ---------------------------------------------------------
  CLI::App* config_cmd = add_cmd("config", "Print the effective configuration as JSON");
  std::string config_path;
  config_cmd->add_option("--config", config_path, "Pipeline configuration JSON to load");
  config_cmd->callback([&] {
    const newsrank::PipelineConfig config =
        config_path.empty() ? newsrank::PipelineConfig{}
                            : newsrank::PipelineConfig::from_json_file(config_path);
    std::cout << config.to_json_text();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ValidationError& e) {
    std::cerr << "newsrank: error: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    std::cerr << "newsrank: error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "newsrank: error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
