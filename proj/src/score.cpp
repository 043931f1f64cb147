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

#include <newsrank/score.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include <newsrank/error.hpp>

namespace newsrank {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

}  // namespace

std::vector<double> normalize_pagerank(const std::vector<double>& cluster_scores, double p) {
  if (!(p > 0.0)) throw ValidationError("normalization exponent p must be positive");
  double denominator = 0.0;
  for (const double score : cluster_scores) {
    if (!(score >= 0.0)) throw ValidationError("scores must be non-negative");
    denominator += std::pow(score, p);
  }
  if (!(denominator > 0.0)) {
    throw ValidationError("cluster has no positive scores to normalize");
  }
  std::vector<double> normalized;
  normalized.reserve(cluster_scores.size());
  for (const double score : cluster_scores) {
    normalized.push_back(std::pow(std::pow(score, p) / denominator, 1.0 / p));
  }
  return normalized;
}

double p_original(double normalized_score, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw ValidationError("theta must lie strictly inside (0, 1)");
  }
  return (std::max(normalized_score, theta) - theta) / (1.0 - theta);
}

double relevance(const RelevanceInputs& inputs, double p_orig, const RelevanceWeights& weights) {
  const auto in_unit = [](double value) { return value >= 0.0 && value <= 1.0; };
  if (!in_unit(inputs.p_comment) || !in_unit(inputs.p_share) || !in_unit(inputs.p_like)) {
    throw ValidationError("engagement probabilities must lie in [0, 1]");
  }
  if (!in_unit(p_orig)) throw ValidationError("p_original must lie in [0, 1]");
  double value = weights.comment * inputs.p_comment + weights.share * inputs.p_share +
                 weights.like * inputs.p_like;
  // P(click) is only needed when its weight participates; an unset (NaN)
  // click probability is legal otherwise.
  if (weights.click_original != 0.0) {
    if (!in_unit(inputs.p_click)) {
      throw ValidationError("P(click) must lie in [0, 1] when its weight is nonzero");
    }
    value += weights.click_original * inputs.p_click * p_orig;
  }
  return value;
}

std::vector<OriginalityRecord> build_originality_records(
    const std::vector<std::string>& ids, const std::vector<double>& pagerank,
    const std::vector<bool>& in_graph, const std::vector<int>& clusters,
    const ScoreParams& params) {
  if (pagerank.size() != ids.size() || in_graph.size() != ids.size() ||
      clusters.size() != ids.size()) {
    throw ValidationError("scoring inputs must align one entry per article");
  }
  if (!(params.p > 0.0)) throw ValidationError("normalization exponent p must be positive");
  if (!(params.theta > 0.0 && params.theta < 1.0)) {
    throw ValidationError("theta must lie strictly inside (0, 1)");
  }

  const std::size_t n = ids.size();
  // Only articles present in the citation graph enter the within-cluster
  // denominator; everything else scores zero.
  std::unordered_map<int, double> denominator;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_graph[i]) denominator[clusters[i]] += std::pow(pagerank[i], params.p);
  }

  std::vector<OriginalityRecord> records(n);
  for (std::size_t i = 0; i < n; ++i) {
    OriginalityRecord& record = records[i];
    record.id = ids[i];
    record.cluster = clusters[i];
    record.pagerank = in_graph[i] ? pagerank[i] : 0.0;
    if (in_graph[i] && denominator[clusters[i]] > 0.0) {
      record.originality = std::pow(
          std::pow(pagerank[i], params.p) / denominator[clusters[i]], 1.0 / params.p);
      record.p_original =
          (std::max(record.originality, params.theta) - params.theta) / (1.0 - params.theta);
    } else {
      record.originality = 0.0;
      record.p_original = 0.0;
    }
  }
  return records;
}

void write_scores_jsonl(const std::vector<OriginalityRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write scores file: " + path);
  for (const OriginalityRecord& record : records) {
    ordered_json row;
    row["id"] = record.id;
    row["cluster"] = record.cluster;
    row["pagerank"] = record.pagerank;
    row["originality"] = record.originality;
    row["p_original"] = record.p_original;
    out << row.dump() << '\n';
  }
  if (!out) throw IoError("error while writing scores file: " + path);
}

std::vector<OriginalityRecord> load_scores_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scores file: " + path);
  std::vector<OriginalityRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json row;
    try {
      row = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ValidationError("scores file " + path + " line " + std::to_string(lineno) + ": " +
                            e.what());
    }
    const bool shape_ok = row.is_object() && row.contains("id") && row["id"].is_string() &&
                          row.contains("cluster") && row["cluster"].is_number_integer() &&
                          row.contains("pagerank") && row["pagerank"].is_number() &&
                          row.contains("originality") && row["originality"].is_number() &&
                          row.contains("p_original") && row["p_original"].is_number();
    if (!shape_ok) {
      throw ValidationError("scores file " + path + " line " + std::to_string(lineno) +
                            ": unexpected record shape");
    }
    OriginalityRecord record;
    record.id = row["id"].get<std::string>();
    record.cluster = row["cluster"].get<int>();
    record.pagerank = row["pagerank"].get<double>();
    record.originality = row["originality"].get<double>();
    record.p_original = row["p_original"].get<double>();
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace newsrank
