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

#ifndef NEWSRANK_EMBED_HPP_
#define NEWSRANK_EMBED_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace newsrank {

// Unit-length float vector produced by an embedding provider.
struct EmbeddingVector {
  std::vector<float> values;

  int dimension() const { return static_cast<int>(values.size()); }
};

// Cosine similarity with double accumulation. Throws ValidationError on
// dimension mismatch or zero-length input.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

// Training-style pair loss: attract pairs pay 1 - cos(a, b); repel pairs
// pay max(0, cos(a, b) - margin). `target` must be +1 or -1.
double cosine_embedding_loss(const EmbeddingVector& a, const EmbeddingVector& b, int target,
                             double margin = 0.0);

// Group of articles sharing one normalized title. The representative is
// the lexicographically smallest member id.
struct MiniCluster {
  std::string normalized_title;
  std::string representative;
  std::vector<std::string> member_ids;  // sorted
};

// Groups (id, title) pairs by normalized title. Output is ordered by
// normalized title so downstream passes are reproducible.
std::vector<MiniCluster> hash_dedup_titles(
    const std::vector<std::pair<std::string, std::string>>& id_titles);

// Produces one embedding per input key (here: normalized titles).
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual int dimension() const = 0;

  // Fills `out` aligned with `keys`. Keys the provider cannot embed are
  // appended to `missing` (when given) and receive a zero-dimension vector.
  virtual void embed_batch(const std::vector<std::string>& keys,
                           std::vector<EmbeddingVector>* out,
                           std::vector<std::string>* missing = nullptr) const = 0;
};

// Deterministic hashed bag-of-words provider: unigram and bigram tokens
// are hashed into `dimension` signed buckets and the result is
// L2-normalized. Text that yields no tokens maps to a fixed basis vector.
class FeatureHashProvider : public EmbeddingProvider {
 public:
  explicit FeatureHashProvider(int dimension = 128);

  int dimension() const override { return dimension_; }
  void embed_batch(const std::vector<std::string>& keys, std::vector<EmbeddingVector>* out,
                   std::vector<std::string>* missing = nullptr) const override;

  // Single-key convenience used by tests.
  EmbeddingVector embed(const std::string& key) const;

 private:
  int dimension_;
};

// Serves vectors loaded from a JSONL sidecar ({"title", "vector"}); keys
// absent from the file are reported through `missing`.
class PrecomputedProvider : public EmbeddingProvider {
 public:
  static PrecomputedProvider load_jsonl(const std::string& path);

  explicit PrecomputedProvider(std::unordered_map<std::string, EmbeddingVector> table);

  int dimension() const override { return dimension_; }
  void embed_batch(const std::vector<std::string>& keys, std::vector<EmbeddingVector>* out,
                   std::vector<std::string>* missing = nullptr) const override;

 private:
  std::unordered_map<std::string, EmbeddingVector> table_;
  int dimension_ = 0;
};

}  // namespace newsrank

#endif  // NEWSRANK_EMBED_HPP_
