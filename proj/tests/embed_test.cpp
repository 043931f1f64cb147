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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include <newsrank/error.hpp>
#include <newsrank/text.hpp>

namespace newsrank {
namespace {

EmbeddingVector vec(std::vector<float> values) {
  EmbeddingVector v;
  v.values = std::move(values);
  return v;
}

double norm(const EmbeddingVector& v) {
  double sum = 0.0;
  for (const float x : v.values) sum += static_cast<double>(x) * x;
  return std::sqrt(sum);
}

TEST(CosineSimilarity, KnownValues) {
  EXPECT_DOUBLE_EQ(cosine_similarity(vec({1, 0, 0}), vec({1, 0, 0})), 1.0);
  EXPECT_DOUBLE_EQ(cosine_similarity(vec({1, 0, 0}), vec({0, 1, 0})), 0.0);
  EXPECT_NEAR(cosine_similarity(vec({0.6f, 0.8f, 0}), vec({1, 0, 0})), 0.6, 1e-7);
}

TEST(CosineSimilarity, RejectsMismatchedOrEmpty) {
  EXPECT_THROW(cosine_similarity(vec({1, 0}), vec({1, 0, 0})), ValidationError);
  EXPECT_THROW(cosine_similarity(vec({}), vec({})), ValidationError);
}

TEST(CosineEmbeddingLoss, KnownValues) {
  const EmbeddingVector x = vec({1, 0});
  const EmbeddingVector y = vec({0, 1});
  // Attracting identical vectors costs nothing.
  EXPECT_DOUBLE_EQ(cosine_embedding_loss(x, x, 1), 0.0);
  // Repelling orthogonal vectors with zero margin costs nothing.
  EXPECT_DOUBLE_EQ(cosine_embedding_loss(x, y, -1), 0.0);
  // Repelling at cosine 0.6 with margin 0.2 leaves 0.4 of loss.
  const EmbeddingVector z = vec({0.6f, 0.8f});
  EXPECT_NEAR(cosine_embedding_loss(z, vec({1, 0}), -1, 0.2), 0.4, 1e-7);
  // Attracting the same pair pays the complement.
  EXPECT_NEAR(cosine_embedding_loss(z, vec({1, 0}), 1), 0.4, 1e-7);
}

TEST(CosineEmbeddingLoss, RejectsBadTarget) {
  const EmbeddingVector x = vec({1, 0});
  EXPECT_THROW(cosine_embedding_loss(x, x, 0), ValidationError);
  EXPECT_THROW(cosine_embedding_loss(x, x, 2), ValidationError);
}

TEST(HashDedup, PunctuationAndCaseVariantsCollapse) {
  const std::vector<MiniCluster> clusters =
      hash_dedup_titles({{"id2", "A b!"}, {"id1", "a B"}});
  ASSERT_EQ(clusters.size(), 1u);
  EXPECT_EQ(clusters[0].normalized_title, "a b");
  EXPECT_EQ(clusters[0].representative, "id1");
  EXPECT_EQ(clusters[0].member_ids, (std::vector<std::string>{"id1", "id2"}));
}

TEST(HashDedup, DistinctTitlesStaySingletons) {
  const std::vector<MiniCluster> clusters =
      hash_dedup_titles({{"a", "first story"}, {"b", "second story"}, {"c", "third story"}});
  ASSERT_EQ(clusters.size(), 3u);
  for (const MiniCluster& cluster : clusters) {
    EXPECT_EQ(cluster.member_ids.size(), 1u);
    EXPECT_EQ(cluster.representative, cluster.member_ids[0]);
  }
}

TEST(HashDedup, MixedCorpusGroupsOnlyExactDuplicates) {
  const std::vector<MiniCluster> clusters = hash_dedup_titles({
      {"a1", "Mayor Resigns Amid Scandal"},
      {"a2", "mayor resigns amid scandal"},
      {"b1", "Storm Closes Harbor"},
      {"b2", "Storm closes harbor!"},
      {"c1", "Quiet day on the markets"},
      {"d1", "Parade draws record crowd"},
  });
  ASSERT_EQ(clusters.size(), 4u);
  int pairs = 0;
  for (const MiniCluster& cluster : clusters) {
    if (cluster.member_ids.size() == 2u) ++pairs;
  }
  EXPECT_EQ(pairs, 2);
}

TEST(FeatureHash, VectorsAreUnitNormAndDeterministic) {
  const FeatureHashProvider provider;
  EXPECT_EQ(provider.dimension(), 128);
  const std::vector<std::string> titles = {
      "mayor resigns amid scandal",
      "storm closes harbor",
      "a",
      "quiet day on the markets as traders wait",
  };
  for (const std::string& title : titles) {
    const EmbeddingVector first = provider.embed(title);
    const EmbeddingVector second = provider.embed(title);
    ASSERT_EQ(first.dimension(), 128);
    EXPECT_NEAR(norm(first), 1.0, 1e-6) << title;
    EXPECT_EQ(first.values, second.values) << title;
  }
}

TEST(FeatureHash, EmptyTitleMapsToReservedBasisVector) {
  const FeatureHashProvider provider(16);
  const EmbeddingVector v = provider.embed("");
  ASSERT_EQ(v.dimension(), 16);
  EXPECT_FLOAT_EQ(v.values[0], 1.0f);
  for (int i = 1; i < 16; ++i) EXPECT_FLOAT_EQ(v.values[i], 0.0f);
}

TEST(FeatureHash, RejectsNonPositiveDimension) {
  EXPECT_THROW(FeatureHashProvider(0), ValidationError);
  EXPECT_THROW(FeatureHashProvider(-4), ValidationError);
}

// A one-word swap of a real headline must stay close to the source but
// clearly closer than an unrelated headline.
TEST(FeatureHash, SpunHeadlineRanksAboveUnrelatedOne) {
  const FeatureHashProvider provider;
  const std::string original = normalize_title("Israel grants Rashida Tlaib West Bank entry");
  const std::string spun = normalize_title("Israel denies Rashida Tlaib West Bank entry");
  const std::string unrelated = normalize_title("Stock markets rally on earnings beat");

  const EmbeddingVector a = provider.embed(original);
  const EmbeddingVector b = provider.embed(spun);
  const EmbeddingVector c = provider.embed(unrelated);

  const double self = cosine_similarity(a, a);
  const double near = cosine_similarity(a, b);
  const double far = cosine_similarity(a, c);
  EXPECT_NEAR(self, 1.0, 1e-6);
  EXPECT_LT(near, 0.999);
  EXPECT_GT(near, 0.5);
  EXPECT_GT(near, far);
}

TEST(FeatureHash, BatchMatchesSingleEmbedAndReportsNoMissing) {
  const FeatureHashProvider provider(64);
  const std::vector<std::string> keys = {"one two", "three"};
  std::vector<EmbeddingVector> out;
  std::vector<std::string> missing;
  provider.embed_batch(keys, &out, &missing);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_TRUE(missing.empty());
  EXPECT_EQ(out[0].values, provider.embed("one two").values);
  EXPECT_EQ(out[1].values, provider.embed("three").values);
}

TEST(Precomputed, ServesNormalizedVectorsFromJsonl) {
  const std::string path = ::testing::TempDir() + "vectors_ok.jsonl";
  {
    std::ofstream out(path, std::ios::binary);
    out << R"({"title":"a b","vector":[1,0]})" << "\n";
    out << R"({"title":"c","vector":[0,2]})" << "\n";
  }
  const PrecomputedProvider provider = PrecomputedProvider::load_jsonl(path);
  EXPECT_EQ(provider.dimension(), 2);

  std::vector<EmbeddingVector> out;
  provider.embed_batch({"a b", "c"}, &out);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_FLOAT_EQ(out[0].values[0], 1.0f);
  EXPECT_FLOAT_EQ(out[0].values[1], 0.0f);
  // The stored (0, 2) row is renormalized to unit length.
  EXPECT_FLOAT_EQ(out[1].values[0], 0.0f);
  EXPECT_FLOAT_EQ(out[1].values[1], 1.0f);
  std::remove(path.c_str());
}

TEST(Precomputed, MissingTitlesAreReportedOrFatal) {
  std::unordered_map<std::string, EmbeddingVector> table;
  table.emplace("known", vec({1, 0}));
  const PrecomputedProvider provider(std::move(table));

  std::vector<EmbeddingVector> out;
  std::vector<std::string> missing;
  provider.embed_batch({"known", "absent one", "absent two"}, &out, &missing);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[1].dimension(), 0);
  EXPECT_EQ(missing, (std::vector<std::string>{"absent one", "absent two"}));

  // Without a collector the provider must fail loudly and name the keys.
  try {
    provider.embed_batch({"absent one"}, &out);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("absent one"), std::string::npos);
  }
}

TEST(Precomputed, LoaderValidatesRows) {
  const auto write_file = [](const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    out << body;
  };
  const std::string dir = ::testing::TempDir();

  write_file(dir + "vec_mixed_dim.jsonl",
             "{\"title\":\"a\",\"vector\":[1,0]}\n{\"title\":\"b\",\"vector\":[1,0,0]}\n");
  EXPECT_THROW(PrecomputedProvider::load_jsonl(dir + "vec_mixed_dim.jsonl"), ValidationError);

  write_file(dir + "vec_zero.jsonl", "{\"title\":\"a\",\"vector\":[0,0]}\n");
  EXPECT_THROW(PrecomputedProvider::load_jsonl(dir + "vec_zero.jsonl"), ValidationError);

  write_file(dir + "vec_dup.jsonl",
             "{\"title\":\"a\",\"vector\":[1,0]}\n{\"title\":\"a\",\"vector\":[0,1]}\n");
  EXPECT_THROW(PrecomputedProvider::load_jsonl(dir + "vec_dup.jsonl"), ValidationError);

  write_file(dir + "vec_shape.jsonl", "{\"title\":\"a\"}\n");
  EXPECT_THROW(PrecomputedProvider::load_jsonl(dir + "vec_shape.jsonl"), ValidationError);

  EXPECT_THROW(PrecomputedProvider::load_jsonl(dir + "vec_nonexistent.jsonl"), IoError);
}

}  // namespace
}  // namespace newsrank
