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

#include <newsrank/eval.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>

#include <newsrank/error.hpp>

namespace newsrank {
namespace {

int parse_int_field(std::string_view text, const std::string& context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError(context + ": \"" + std::string(text) + "\" is not an integer");
  }
  return value;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

double pairwise_auc(const std::vector<std::pair<LabeledPair, double>>& scored_pairs,
                    double binarize_at) {
  if (binarize_at != 0.5 && binarize_at != 1.5 && binarize_at != 2.5) {
    throw ValidationError("binarize_at must be 0.5, 1.5, or 2.5 (between label levels)");
  }

  std::vector<std::size_t> order(scored_pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&scored_pairs](std::size_t a, std::size_t b) {
    return scored_pairs[a].second < scored_pairs[b].second;
  });

  // Midrank sum over positives: tied scores share the average of the
  // ranks they span, so each tied positive/negative pair counts one half.
  std::int64_t positives = 0;
  std::int64_t negatives = 0;
  double positive_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && scored_pairs[order[j]].second == scored_pairs[order[i]].second) {
      ++j;
    }
    const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t t = i; t < j; ++t) {
      if (static_cast<double>(scored_pairs[order[t]].first.label) > binarize_at) {
        ++positives;
        positive_rank_sum += midrank;
      } else {
        ++negatives;
      }
    }
    i = j;
  }
  if (positives == 0 || negatives == 0) {
    throw ValidationError("AUC requires at least one positive and one negative pair");
  }
  const double p = static_cast<double>(positives);
  return (positive_rank_sum - p * (p + 1.0) / 2.0) / (p * static_cast<double>(negatives));
}

PrResult clustering_precision_recall(const std::vector<LabeledPair>& pairs,
                                     const std::unordered_map<std::string, int>& cluster_of,
                                     const PrOptions& options) {
  PrResult result;
  for (const LabeledPair& pair : pairs) {
    const auto a = cluster_of.find(pair.id_a);
    if (a == cluster_of.end()) {
      throw ValidationError("pair references unknown id \"" + pair.id_a + "\"");
    }
    const auto b = cluster_of.find(pair.id_b);
    if (b == cluster_of.end()) {
      throw ValidationError("pair references unknown id \"" + pair.id_b + "\"");
    }
    const bool predicted = a->second == b->second;
    const bool actual = static_cast<double>(pair.label) > options.positive_at;
    if (predicted && actual) {
      ++result.true_positive;
    } else if (predicted && !actual) {
      ++result.false_positive;
    } else if (!predicted && actual) {
      ++result.false_negative;
    }
  }
  const std::int64_t predicted_positive = result.true_positive + result.false_positive;
  const std::int64_t actual_positive = result.true_positive + result.false_negative;
  if (predicted_positive > 0) {
    result.precision =
        static_cast<double>(result.true_positive) / static_cast<double>(predicted_positive);
  }
  if (actual_positive > 0) {
    result.recall =
        static_cast<double>(result.true_positive) / static_cast<double>(actual_positive);
  }
  return result;
}

std::vector<LiftRow> lift_table(const std::vector<OriginalityRecord>& records,
                                const std::unordered_map<std::string, double>& views,
                                const std::vector<double>& thresholds) {
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i - 1] < thresholds[i])) {
      throw ValidationError("lift thresholds must be strictly ascending");
    }
  }

  double total_views = 0.0;
  for (const OriginalityRecord& record : records) {
    const auto it = views.find(record.id);
    if (it != views.end()) {
      if (!(it->second >= 0.0)) throw ValidationError("view counts must be non-negative");
      total_views += it->second;
    }
  }

  std::vector<LiftRow> rows;
  rows.reserve(thresholds.size());
  for (const double threshold : thresholds) {
    LiftRow row;
    row.threshold = threshold;
    double promoted_views = 0.0;
    for (const OriginalityRecord& record : records) {
      if (record.originality > threshold) {
        ++row.promoted;
        const auto it = views.find(record.id);
        if (it != views.end()) promoted_views += it->second;
      }
    }
    row.view_share = total_views > 0.0 ? promoted_views / total_views : 0.0;
    rows.push_back(row);
  }
  return rows;
}

std::unordered_map<std::string, double> views_from_in_degree(const CitationGraph& graph) {
  std::unordered_map<std::string, double> views;
  views.reserve(graph.ids.size());
  for (int v = 0; v < graph.vertex_count(); ++v) {
    views.emplace(graph.ids[v], static_cast<double>(graph.in_edges[v].size() + 1));
  }
  return views;
}

std::vector<LabeledPair> load_pairs_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open pairs file: " + path);
  std::vector<LabeledPair> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> fields = split_tabs(line);
    const std::string context = "pairs file " + path + " line " + std::to_string(lineno);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      throw ValidationError(context + ": expected `id_a<TAB>id_b<TAB>label`");
    }
    LabeledPair pair;
    pair.id_a = fields[0];
    pair.id_b = fields[1];
    pair.label = parse_int_field(fields[2], context);
    if (pair.label < 0 || pair.label > 3) {
      throw ValidationError(context + ": label must be in [0, 3]");
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<std::pair<std::string, int>> load_labels_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open labels file: " + path);
  std::vector<std::pair<std::string, int>> labels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> fields = split_tabs(line);
    const std::string context = "labels file " + path + " line " + std::to_string(lineno);
    if (fields.size() != 2 || fields[0].empty()) {
      throw ValidationError(context + ": expected `id<TAB>rating`");
    }
    const int rating = parse_int_field(fields[1], context);
    if (rating < 1 || rating > 3) {
      throw ValidationError(context + ": rating must be in [1, 3]");
    }
    labels.emplace_back(fields[0], rating);
  }
  return labels;
}

}  // namespace newsrank
