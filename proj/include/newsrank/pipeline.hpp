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

#ifndef NEWSRANK_PIPELINE_HPP_
#define NEWSRANK_PIPELINE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <newsrank/citation.hpp>
#include <newsrank/cluster.hpp>
#include <newsrank/pagerank.hpp>
#include <newsrank/score.hpp>

namespace newsrank {

// Everything a snapshot run needs, loadable from a single JSON file.
struct PipelineConfig {
  int window_days = 7;
  PageRankParams pagerank;
  std::string embedding_provider = "feature_hash";  // or "precomputed"
  std::string vectors_path;  // JSONL sidecar for the precomputed provider
  ClusterParams cluster;
  ScoreParams score;
  RelevanceWeights weights;
  std::string blocklist_path;
  std::string canonical_map_path;

  // Parses the JSON config format; unknown keys are rejected so typos
  // fail loudly. Missing keys keep their defaults.
  static PipelineConfig from_json_file(const std::string& path);
  static PipelineConfig from_json_text(const std::string& text);
  std::string to_json_text() const;  // lossless round-trip of every field

  void validate() const;  // throws ValidationError on out-of-range values
};

struct StageTiming {
  std::string stage;
  double seconds = 0.0;
};

struct SnapshotResult {
  std::int64_t snapshot_time = 0;
  std::vector<OriginalityRecord> records;  // one per windowed article
  GraphStats stats;
  std::vector<StageTiming> timings;
  std::vector<RejectRecord> rejects;
  std::string output_dir;  // final artifact directory, empty if not written
};

// Runs load -> graph -> pagerank -> cluster -> score over one window and,
// when `output_root` is non-empty, writes graph.tsv, pagerank.jsonl,
// clusters.jsonl, scores.jsonl and stats.json into a directory named by
// the snapshot timestamp. Artifacts are staged in a temporary directory
// and renamed into place so failed runs leave nothing behind. Stage
// failures are rethrown with the stage name prefixed.
SnapshotResult run_snapshot(const std::string& corpus_path, const PipelineConfig& config,
                            std::int64_t snapshot_time, const std::string& output_root = "");

struct SeriesTick {
  std::int64_t snapshot_time = 0;
  bool ok = false;
  std::string error;  // stage-tagged message when ok is false
  SnapshotResult result;
};

// Replays run_snapshot at each tick in [start_time, end_time] stepping by
// `interval_seconds`, each tick over its own trailing window. A failed
// tick is recorded and the series continues. When `output_root` is given,
// every tick gets its own timestamped directory plus a combined
// series.jsonl of per-article p_original trajectories.
std::vector<SeriesTick> run_series(const std::string& corpus_path, const PipelineConfig& config,
                                   std::int64_t start_time, std::int64_t end_time,
                                   std::int64_t interval_seconds = 3600,
                                   const std::string& output_root = "");

}  // namespace newsrank

#endif  // NEWSRANK_PIPELINE_HPP_
