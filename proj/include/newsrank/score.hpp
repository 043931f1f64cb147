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

#ifndef NEWSRANK_SCORE_HPP_
#define NEWSRANK_SCORE_HPP_

#include <string>
#include <vector>

namespace newsrank {

// Normalizes raw authority scores within one cluster:
//
//   s_v = (n_v^p / sum_u n_u^p)^(1/p)
//
// `p` must be positive; entries must be non-negative with a positive sum.
std::vector<double> normalize_pagerank(const std::vector<double>& cluster_scores, double p = 1.0);

// Maps a normalized score to an originality probability by clamping at
// `theta` and rescaling the remainder to [0, 1]:
//
//   P = (max(s, theta) - theta) / (1 - theta)
//
// `theta` must lie strictly inside (0, 1).
double p_original(double normalized_score, double theta = 0.5);

// Weighted ranking value combining engagement predictions with the
// originality term. The last weight multiplies p_click * p_orig. An
// unavailable click probability may be passed as NaN as long as its
// weight is zero; every probability that participates must be in [0, 1].
struct RelevanceInputs {
  double p_comment = 0.0;
  double p_share = 0.0;
  double p_like = 0.0;
  double p_click = 0.0;
};

struct RelevanceWeights {
  double comment = 1.0;
  double share = 1.0;
  double like = 1.0;
  double click_original = 1.0;
};

double relevance(const RelevanceInputs& inputs, double p_orig, const RelevanceWeights& weights);

// Per-article scoring output row.
struct OriginalityRecord {
  std::string id;
  int cluster = -1;
  double pagerank = 0.0;
  double originality = 0.0;  // within-cluster normalized score
  double p_original = 0.0;
};

struct ScoreParams {
  double theta = 0.5;
  double p = 1.0;
};

// Combines per-article authority scores and cluster labels into scoring
// rows. Only articles present in the citation graph participate in the
// within-cluster normalization; articles with no citations at all emit
// originality 0 and p_original 0.
std::vector<OriginalityRecord> build_originality_records(
    const std::vector<std::string>& ids, const std::vector<double>& pagerank,
    const std::vector<bool>& in_graph, const std::vector<int>& clusters,
    const ScoreParams& params = {});

// JSONL round-trip ({"id", "cluster", "pagerank", "originality",
// "p_original"}) for snapshot directories.
void write_scores_jsonl(const std::vector<OriginalityRecord>& records, const std::string& path);
std::vector<OriginalityRecord> load_scores_jsonl(const std::string& path);

}  // namespace newsrank

#endif  // NEWSRANK_SCORE_HPP_
