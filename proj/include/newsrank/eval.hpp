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

#ifndef NEWSRANK_EVAL_HPP_
#define NEWSRANK_EVAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <newsrank/citation.hpp>
#include <newsrank/score.hpp>

namespace newsrank {

// Human judgment for one article pair on the 0..3 similarity scale
// (0 = unrelated ... 3 = same story).
struct LabeledPair {
  std::string id_a;
  std::string id_b;
  int label = 0;
};

// Area under the ROC curve of model scores against binarized pair labels,
// computed with midranks so tied scores count as half-wins. `binarize_at`
// must fall between two adjacent label levels (0.5, 1.5, or 2.5); labels
// above it are positives. Throws ValidationError when either class is
// empty.
double pairwise_auc(const std::vector<std::pair<LabeledPair, double>>& scored_pairs,
                    double binarize_at = 1.5);

struct PrResult {
  std::optional<double> precision;  // empty when nothing was predicted positive
  std::optional<double> recall;     // empty when there are no actual positives
  std::int64_t true_positive = 0;
  std::int64_t false_positive = 0;
  std::int64_t false_negative = 0;
};

struct PrOptions {
  double positive_at = 1.5;  // labels strictly greater count as "same story"
};

// Precision/recall of "same cluster" as a predictor of "same story".
// Every pair id must be present in `cluster_of`; an unknown id is an
// error naming it.
PrResult clustering_precision_recall(const std::vector<LabeledPair>& pairs,
                                     const std::unordered_map<std::string, int>& cluster_of,
                                     const PrOptions& options = {});

// Share of views landing on promoted articles (originality strictly above
// the threshold), per threshold.
struct LiftRow {
  double threshold = 0.0;
  std::int64_t promoted = 0;   // articles above the threshold
  double view_share = 0.0;     // promoted views / total views (0 when no views)
};

// `views` maps article id to a non-negative view count; ids absent from
// the map count as zero views. Thresholds must be strictly ascending.
std::vector<LiftRow> lift_table(const std::vector<OriginalityRecord>& records,
                                const std::unordered_map<std::string, double>& views,
                                const std::vector<double>& thresholds);

// Default synthetic view model: views proportional to citation in-degree
// (so every graph vertex gets in_degree + 1 views, counting its own).
std::unordered_map<std::string, double> views_from_in_degree(const CitationGraph& graph);

// TSV loaders for the evaluation inputs: `id_a <TAB> id_b <TAB> label`
// (labels 0..3) and `id <TAB> rating` (ratings 1..3).
std::vector<LabeledPair> load_pairs_tsv(const std::string& path);
std::vector<std::pair<std::string, int>> load_labels_tsv(const std::string& path);

}  // namespace newsrank

#endif  // NEWSRANK_EVAL_HPP_
