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

#include <newsrank/embed.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <utility>

#include <json.hpp>

#include <newsrank/error.hpp>
#include <newsrank/text.hpp>

namespace newsrank {
namespace {

using nlohmann::json;

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (const char c : data) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ULL;
  }
  return hash;
}

// The reserved vector for titles with no features: first basis vector.
EmbeddingVector empty_title_vector(int dimension) {
  EmbeddingVector vec;
  vec.values.assign(dimension, 0.0f);
  vec.values[0] = 1.0f;
  return vec;
}

}  // namespace

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dimension() == 0 || a.dimension() != b.dimension()) {
    throw ValidationError("cosine_similarity requires equal non-zero dimensions");
  }
  double dot = 0.0;
  for (int i = 0; i < a.dimension(); ++i) {
    dot += static_cast<double>(a.values[i]) * static_cast<double>(b.values[i]);
  }
  return dot;
}

double cosine_embedding_loss(const EmbeddingVector& a, const EmbeddingVector& b, int target,
                             double margin) {
  const double cos = cosine_similarity(a, b);
  if (target == 1) return 1.0 - cos;
  if (target == -1) return std::max(0.0, cos - margin);
  throw ValidationError("cosine_embedding_loss target must be +1 or -1");
}

std::vector<MiniCluster> hash_dedup_titles(
    const std::vector<std::pair<std::string, std::string>>& id_titles) {
  // Normalization is idempotent, so applying it here keeps the function
  // total whether callers pass raw or pre-normalized titles.
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& [id, title] : id_titles) {
    groups[normalize_title(title)].push_back(id);
  }
  std::vector<MiniCluster> clusters;
  clusters.reserve(groups.size());
  for (auto& [normalized, ids] : groups) {
    std::sort(ids.begin(), ids.end());
    MiniCluster cluster;
    cluster.normalized_title = normalized;
    cluster.representative = ids.front();
    cluster.member_ids = std::move(ids);
    clusters.push_back(std::move(cluster));
  }
  return clusters;
}

FeatureHashProvider::FeatureHashProvider(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw ValidationError("embedding dimension must be >= 1");
}

EmbeddingVector FeatureHashProvider::embed(const std::string& key) const {
  const std::vector<std::string> tokens = tokenize(key);
  if (tokens.empty()) return empty_title_vector(dimension_);

  std::vector<double> accum(dimension_, 0.0);
  const auto add_feature = [this, &accum](const std::string& feature) {
    const std::uint64_t hash = fnv1a64(feature);
    const auto bucket = static_cast<int>(hash % static_cast<std::uint64_t>(dimension_));
    accum[bucket] += ((hash >> 32) & 1) != 0 ? 1.0 : -1.0;
  };
  // Unigrams and adjacent bigrams, tagged so "a b" and the token "a b"
  // cannot collide structurally. \x1f is the ASCII unit separator.
  for (const std::string& token : tokens) {
    add_feature("1\x1f" + token);
  }
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    add_feature("2\x1f" + tokens[i] + "\x1f" + tokens[i + 1]);
  }

  double norm_sq = 0.0;
  for (const double x : accum) norm_sq += x * x;
  if (norm_sq == 0.0) return empty_title_vector(dimension_);  // total sign cancellation
  const double inv_norm = 1.0 / std::sqrt(norm_sq);
  EmbeddingVector vec;
  vec.values.resize(dimension_);
  for (int i = 0; i < dimension_; ++i) {
    vec.values[i] = static_cast<float>(accum[i] * inv_norm);
  }
  return vec;
}

void FeatureHashProvider::embed_batch(const std::vector<std::string>& keys,
                                      std::vector<EmbeddingVector>* out,
                                      std::vector<std::string>* missing) const {
  (void)missing;  // the hash provider embeds any string
  out->clear();
  out->reserve(keys.size());
  for (const std::string& key : keys) out->push_back(embed(key));
}

PrecomputedProvider::PrecomputedProvider(std::unordered_map<std::string, EmbeddingVector> table)
    : table_(std::move(table)) {
  for (const auto& [key, vec] : table_) {
    if (dimension_ == 0) dimension_ = vec.dimension();
    if (vec.dimension() != dimension_) {
      throw ValidationError("precomputed vectors must share one dimension");
    }
  }
}

PrecomputedProvider PrecomputedProvider::load_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open vector file: " + path);
  std::unordered_map<std::string, EmbeddingVector> table;
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
      throw ValidationError("vector file " + path + " line " + std::to_string(lineno) + ": " +
                            e.what());
    }
    if (!row.is_object() || !row.contains("title") || !row["title"].is_string() ||
        !row.contains("vector") || !row["vector"].is_array()) {
      throw ValidationError("vector file " + path + " line " + std::to_string(lineno) +
                            ": expected {\"title\": str, \"vector\": [number]}");
    }
    EmbeddingVector vec;
    double norm_sq = 0.0;
    for (const auto& entry : row["vector"]) {
      if (!entry.is_number()) {
        throw ValidationError("vector file " + path + " line " + std::to_string(lineno) +
                              ": vector entries must be numbers");
      }
      const double x = entry.get<double>();
      norm_sq += x * x;
      vec.values.push_back(static_cast<float>(x));
    }
    if (vec.values.empty() || !(norm_sq > 0.0) || !std::isfinite(norm_sq)) {
      throw ValidationError("vector file " + path + " line " + std::to_string(lineno) +
                            ": vector must be non-empty, finite, and non-zero");
    }
    // Stored vectors are renormalized so the unit-norm contract holds
    // regardless of upstream rounding.
    const auto inv_norm = static_cast<float>(1.0 / std::sqrt(norm_sq));
    for (float& x : vec.values) x *= inv_norm;
    const std::string title = row["title"].get<std::string>();
    if (!table.emplace(title, std::move(vec)).second) {
      throw ValidationError("vector file " + path + ": duplicate title \"" + title + "\"");
    }
  }
  return PrecomputedProvider(std::move(table));
}

void PrecomputedProvider::embed_batch(const std::vector<std::string>& keys,
                                      std::vector<EmbeddingVector>* out,
                                      std::vector<std::string>* missing) const {
  out->clear();
  out->reserve(keys.size());
  std::vector<std::string> absent;
  for (const std::string& key : keys) {
    const auto it = table_.find(key);
    if (it == table_.end()) {
      absent.push_back(key);
      out->emplace_back();
    } else {
      out->push_back(it->second);
    }
  }
  if (!absent.empty()) {
    if (missing != nullptr) {
      *missing = std::move(absent);
    } else {
      std::string message = "precomputed provider missing " + std::to_string(absent.size()) +
                            " title(s):";
      const std::size_t shown = std::min<std::size_t>(absent.size(), 10);
      for (std::size_t i = 0; i < shown; ++i) message += " \"" + absent[i] + "\"";
      if (absent.size() > shown) message += " ...";
      throw ValidationError(message);
    }
  }
}

}  // namespace newsrank
