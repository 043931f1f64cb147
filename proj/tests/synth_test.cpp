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

#include <newsrank/synth.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include <newsrank/citation.hpp>
#include <newsrank/corpus.hpp>
#include <newsrank/error.hpp>

namespace newsrank {
namespace {

std::set<std::string> title_words(const std::string& title) {
  std::set<std::string> words;
  std::istringstream stream(title);
  std::string word;
  while (stream >> word) words.insert(word);
  return words;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(Synth, SingleEventWithoutFollowersIsOneIsolatedArticle) {
  SynthParams params;
  params.events = 1;
  params.followers_per_event = 0;
  const SyntheticCorpus synth = generate_synthetic_corpus(params);
  ASSERT_EQ(synth.corpus.articles.size(), 1u);
  EXPECT_TRUE(synth.corpus.articles[0].links.empty());
  EXPECT_TRUE(synth.edges.empty());
  ASSERT_EQ(synth.truth.size(), 1u);
  EXPECT_TRUE(synth.truth[0].original);
  EXPECT_EQ(synth.truth[0].id, "e0000-a000");
}

TEST(Synth, TwoEventsProduceSeparableStructure) {
  SynthParams params;
  params.events = 2;
  params.followers_per_event = 5;
  params.publishers = 8;
  const SyntheticCorpus synth = generate_synthetic_corpus(params);
  ASSERT_EQ(synth.corpus.articles.size(), 12u);

  // Every edge stays inside its event and originals take the strict
  // in-degree maximum.
  std::map<std::string, int> in_degree;
  for (const auto& [citing, cited] : synth.edges) {
    EXPECT_EQ(citing.substr(0, 5), cited.substr(0, 5)) << citing << " -> " << cited;
    ++in_degree[cited];
  }
  EXPECT_EQ(in_degree.at("e0000-a000"), 5);
  EXPECT_EQ(in_degree.at("e0001-a000"), 5);
  for (const auto& [id, degree] : in_degree) {
    if (id != "e0000-a000" && id != "e0001-a000") EXPECT_LT(degree, 5) << id;
  }

  // Titles inside an event differ in at most one word; across events they
  // share none.
  const std::set<std::string> base0 = title_words(synth.corpus.articles[0].title);
  const std::set<std::string> base1 = title_words(synth.corpus.articles[6].title);
  for (int i = 1; i < 6; ++i) {
    const std::set<std::string> words = title_words(synth.corpus.articles[i].title);
    std::vector<std::string> common;
    std::set_intersection(base0.begin(), base0.end(), words.begin(), words.end(),
                          std::back_inserter(common));
    EXPECT_GE(common.size(), 7u) << synth.corpus.articles[i].id;
  }
  std::vector<std::string> across;
  std::set_intersection(base0.begin(), base0.end(), base1.begin(), base1.end(),
                        std::back_inserter(across));
  EXPECT_TRUE(across.empty());
}

TEST(Synth, FixedSeedReproducesIdenticalBytes) {
  SynthParams params;
  params.events = 20;
  params.followers_per_event = 5;
  params.noise_edges = 10;
  const SyntheticCorpus first = generate_synthetic_corpus(params);
  const SyntheticCorpus second = generate_synthetic_corpus(params);

  const std::string dir = ::testing::TempDir();
  write_synthetic_corpus(first, dir + "synth_a.jsonl", dir + "synth_a.tsv");
  write_synthetic_corpus(second, dir + "synth_b.jsonl", dir + "synth_b.tsv");
  EXPECT_EQ(slurp(dir + "synth_a.jsonl"), slurp(dir + "synth_b.jsonl"));
  EXPECT_EQ(slurp(dir + "synth_a.tsv"), slurp(dir + "synth_b.tsv"));

  params.seed = 43;
  const SyntheticCorpus other = generate_synthetic_corpus(params);
  write_synthetic_corpus(other, dir + "synth_c.jsonl", dir + "synth_c.tsv");
  EXPECT_NE(slurp(dir + "synth_a.jsonl"), slurp(dir + "synth_c.jsonl"));
  for (const char* name : {"synth_a.jsonl", "synth_a.tsv", "synth_b.jsonl", "synth_b.tsv",
                           "synth_c.jsonl", "synth_c.tsv"}) {
    std::remove((dir + name).c_str());
  }
}

TEST(Synth, EmittedEdgesMatchBuiltGraphAtZeroNoise) {
  SynthParams params;
  params.events = 6;
  params.followers_per_event = 4;
  params.publishers = 10;
  const SyntheticCorpus synth = generate_synthetic_corpus(params);
  const CitationGraph graph = build_graph(synth.corpus);

  std::set<std::pair<std::string, std::string>> built;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    for (const int u : graph.out_edges[v]) built.emplace(graph.ids[v], graph.ids[u]);
  }
  const std::set<std::pair<std::string, std::string>> emitted(synth.edges.begin(),
                                                              synth.edges.end());
  EXPECT_EQ(built, emitted);
  EXPECT_EQ(graph.dropped_same_publisher, 0);
  EXPECT_EQ(graph.dropped_external, 0);
  EXPECT_EQ(graph.dropped_duplicate, 0);
}

TEST(Synth, TruthAlignsWithArticles) {
  SynthParams params;
  params.events = 3;
  params.followers_per_event = 4;
  const SyntheticCorpus synth = generate_synthetic_corpus(params);
  ASSERT_EQ(synth.truth.size(), synth.corpus.articles.size());
  std::map<int, int> originals_per_event;
  for (std::size_t i = 0; i < synth.truth.size(); ++i) {
    EXPECT_EQ(synth.truth[i].id, synth.corpus.articles[i].id);
    if (synth.truth[i].original) ++originals_per_event[synth.truth[i].event];
  }
  ASSERT_EQ(originals_per_event.size(), 3u);
  for (const auto& [event, count] : originals_per_event) EXPECT_EQ(count, 1);

  const std::int64_t window_start =
      synth.corpus.snapshot_time - static_cast<std::int64_t>(synth.corpus.window_days) * 86400;
  for (const Article& article : synth.corpus.articles) {
    EXPECT_GT(article.published_at, window_start);
    EXPECT_LE(article.published_at, synth.corpus.snapshot_time);
  }
}

TEST(Synth, NoiseAddsExactlyTheRequestedCrossEventEdges) {
  SynthParams params;
  params.events = 3;
  params.followers_per_event = 3;
  params.publishers = 6;
  const SyntheticCorpus clean = generate_synthetic_corpus(params);
  params.noise_edges = 7;
  const SyntheticCorpus noisy = generate_synthetic_corpus(params);

  ASSERT_EQ(noisy.edges.size(), clean.edges.size() + 7u);
  for (std::size_t i = 0; i < clean.edges.size(); ++i) {
    EXPECT_EQ(noisy.edges[i], clean.edges[i]);
  }
  for (std::size_t i = clean.edges.size(); i < noisy.edges.size(); ++i) {
    const auto& [citing, cited] = noisy.edges[i];
    EXPECT_NE(citing.substr(0, 5), cited.substr(0, 5)) << citing << " -> " << cited;
  }
}

TEST(Synth, WrittenCorpusLoadsCleanly) {
  SynthParams params;
  params.events = 4;
  params.followers_per_event = 3;
  const SyntheticCorpus synth = generate_synthetic_corpus(params);
  const std::string dir = ::testing::TempDir();
  const std::string articles_path = dir + "synth_load.jsonl";
  const std::string truth_path = dir + "synth_load.tsv";
  write_synthetic_corpus(synth, articles_path, truth_path);

  const LoadResult loaded =
      load_corpus(articles_path, params.snapshot_time, params.window_days);
  EXPECT_TRUE(loaded.rejects.empty());
  ASSERT_EQ(loaded.corpus.articles.size(), synth.corpus.articles.size());
  for (std::size_t i = 0; i < loaded.corpus.articles.size(); ++i) {
    EXPECT_EQ(loaded.corpus.articles[i].id, synth.corpus.articles[i].id);
    EXPECT_EQ(loaded.corpus.articles[i].title, synth.corpus.articles[i].title);
    EXPECT_EQ(loaded.corpus.articles[i].publisher, synth.corpus.articles[i].publisher);
    EXPECT_EQ(loaded.corpus.articles[i].published_at, synth.corpus.articles[i].published_at);
    EXPECT_EQ(loaded.corpus.articles[i].links, synth.corpus.articles[i].links);
  }

  std::ifstream truth(truth_path);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(truth, line)) {
    std::istringstream fields(line);
    std::string id;
    int event = -1;
    int original = -1;
    fields >> id >> event >> original;
    EXPECT_EQ(id, synth.truth[rows].id);
    EXPECT_EQ(event, synth.truth[rows].event);
    EXPECT_EQ(original, synth.truth[rows].original ? 1 : 0);
    ++rows;
  }
  EXPECT_EQ(rows, synth.truth.size());
  std::remove(articles_path.c_str());
  std::remove(truth_path.c_str());
}

TEST(Synth, RejectsInvalidParams) {
  SynthParams params;
  params.events = 0;
  EXPECT_THROW(generate_synthetic_corpus(params), ValidationError);
  params = {};
  params.followers_per_event = -1;
  EXPECT_THROW(generate_synthetic_corpus(params), ValidationError);
  params = {};
  params.publishers = 1;
  EXPECT_THROW(generate_synthetic_corpus(params), ValidationError);
  params = {};
  params.noise_edges = -1;
  EXPECT_THROW(generate_synthetic_corpus(params), ValidationError);
  params = {};
  params.events = 1;
  params.noise_edges = 1;
  EXPECT_THROW(generate_synthetic_corpus(params), ValidationError);
  params = {};
  params.window_days = 0;
  EXPECT_THROW(generate_synthetic_corpus(params), ValidationError);
  params = {};
  params.events = 4100;  // exceeds the disjoint word bank
  EXPECT_THROW(generate_synthetic_corpus(params), ValidationError);
}

}  // namespace
}  // namespace newsrank
