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

#include <cstdio>
#include <fstream>
#include <utility>

#include <json.hpp>

#include <newsrank/error.hpp>
#include <newsrank/rng.hpp>
#include <newsrank/timeutil.hpp>

namespace newsrank {
namespace {

using ordered_json = nlohmann::ordered_json;

// Title shape: every event draws a disjoint slice of the word bank, so
// titles from different events share no tokens at all while titles inside
// an event differ in at most one position.
constexpr int kTitleWords = 8;
constexpr int kPerturbPositions = 4;   // only the first few words ever vary
constexpr int kAlternatesPerSlot = 2;  // spare words per varying position
constexpr int kWordsPerEvent =
    kTitleWords + kPerturbPositions * kAlternatesPerSlot;

// Pronounceable three-syllable words from a 40-syllable alphabet; index
// maps bijectively to a word, giving 64000 distinct words.
std::string word_at(int index) {
  static constexpr char kConsonants[] = {'b', 'd', 'f', 'g', 'k', 'l', 'm', 'n'};
  static constexpr char kVowels[] = {'a', 'e', 'i', 'o', 'u'};
  std::string word;
  for (int s = 0; s < 3; ++s) {
    const int syllable = index % 40;
    index /= 40;
    word += kConsonants[syllable / 5];
    word += kVowels[syllable % 5];
  }
  return word;
}

std::string article_id(int event, int article) {
  char buffer[24];
  std::snprintf(buffer, sizeof(buffer), "e%04d-a%03d", event, article);
  return buffer;
}

std::string join_words(const std::vector<std::string>& words) {
  std::string title;
  for (const std::string& word : words) {
    if (!title.empty()) title += ' ';
    title += word;
  }
  return title;
}

}  // namespace

SyntheticCorpus generate_synthetic_corpus(const SynthParams& params) {
  if (params.events < 1) throw ValidationError("events must be >= 1");
  if (params.events > 9999) throw ValidationError("events must fit the e%04d id scheme");
  if (params.followers_per_event < 0) throw ValidationError("followers_per_event must be >= 0");
  if (params.followers_per_event > 998) {
    throw ValidationError("followers_per_event must fit the a%03d id scheme");
  }
  if (params.publishers < 2) {
    throw ValidationError("publishers must be >= 2 so citations cross publishers");
  }
  if (params.events * kWordsPerEvent > 40 * 40 * 40) {
    throw ValidationError("word bank exhausted: reduce events below " +
                          std::to_string(40 * 40 * 40 / kWordsPerEvent + 1));
  }
  if (params.noise_edges < 0) throw ValidationError("noise_edges must be non-negative");
  if (params.noise_edges > 0 && params.events < 2) {
    throw ValidationError("noise_edges require at least two events");
  }
  if (params.window_days < 1) throw ValidationError("window_days must be >= 1");

  SplitMix64 rng(params.seed);
  SyntheticCorpus synth;
  synth.corpus.snapshot_time = params.snapshot_time;
  synth.corpus.window_days = params.window_days;

  std::vector<std::string> publisher_names(params.publishers);
  for (int p = 0; p < params.publishers; ++p) {
    publisher_names[p] = "pub" + std::to_string(p);
  }

  const int followers = params.followers_per_event;
  // Everything lands inside the window with room for per-article stagger.
  const std::int64_t window_start =
      params.snapshot_time - static_cast<std::int64_t>(params.window_days) * 86400;

  const auto url_of = [&publisher_names](int publisher, const std::string& id) {
    return "https://" + publisher_names[publisher] + ".example/" + id;
  };

  for (int e = 0; e < params.events; ++e) {
    const int word_base = e * kWordsPerEvent;
    std::vector<std::string> words(kTitleWords);
    for (int w = 0; w < kTitleWords; ++w) words[w] = word_at(word_base + w);

    const int original_publisher = static_cast<int>(rng.bounded(params.publishers));
    const std::string original_id = article_id(e, 0);
    const std::int64_t original_time = window_start + 3600 + e;

    Article original;
    original.id = original_id;
    original.publisher = publisher_names[original_publisher];
    original.url = url_of(original_publisher, original_id);
    original.canonical_url = original.url;
    original.title = join_words(words);
    original.published_at = original_time;
    synth.corpus.articles.push_back(original);
    synth.truth.push_back({original_id, e, true});

    // Chain citations among followers are capped at followers - 1 edges in
    // total, so no follower's in-degree can reach the original's.
    int chain_budget = followers - 1;
    std::vector<std::string> follower_urls(followers + 1);
    std::vector<int> follower_publisher(followers + 1, original_publisher);
    follower_urls[0] = original.url;
    for (int f = 1; f <= followers; ++f) {
      Article follower;
      follower.id = article_id(e, f);
      // Any publisher except the original's, so every citation to the
      // original crosses publishers and survives filtering.
      int publisher = static_cast<int>(rng.bounded(params.publishers - 1));
      if (publisher >= original_publisher) ++publisher;
      follower.publisher = publisher_names[publisher];
      follower.url = url_of(publisher, follower.id);
      follower.canonical_url = follower.url;
      follower.published_at = original_time + 60 * f;

      if (rng.unit() < 0.5) {
        follower.title = join_words(words);
      } else {
        std::vector<std::string> perturbed = words;
        const int slot = static_cast<int>(rng.bounded(kPerturbPositions));
        const int alternate = static_cast<int>(rng.bounded(kAlternatesPerSlot));
        perturbed[slot] =
            word_at(word_base + kTitleWords + slot * kAlternatesPerSlot + alternate);
        follower.title = join_words(perturbed);
      }

      follower.links.push_back(original.url);
      synth.edges.emplace_back(follower.id, original_id);
      if (f >= 2 && chain_budget > 0 && rng.unit() < 0.3) {
        const int target = 1 + static_cast<int>(rng.bounded(f - 1));
        // Chain edges must also cross publishers or the graph build would
        // drop them; skipping keeps the emitted edge list exact.
        if (follower_publisher[target] != publisher) {
          follower.links.push_back(follower_urls[target]);
          synth.edges.emplace_back(follower.id, article_id(e, target));
          --chain_budget;
        }
      }

      follower_urls[f] = follower.url;
      follower_publisher[f] = publisher;
      synth.corpus.articles.push_back(std::move(follower));
      synth.truth.push_back({article_id(e, f), e, false});
    }
  }

  // Cross-event noise citations, if requested.
  const int per_event = followers + 1;
  for (int i = 0; i < params.noise_edges; ++i) {
    const int from_event = static_cast<int>(rng.bounded(params.events));
    int to_event = static_cast<int>(rng.bounded(params.events - 1));
    if (to_event >= from_event) ++to_event;
    const int from_article = static_cast<int>(rng.bounded(per_event));
    const int to_article = static_cast<int>(rng.bounded(per_event));
    Article& citing = synth.corpus.articles[from_event * per_event + from_article];
    const Article& cited = synth.corpus.articles[to_event * per_event + to_article];
    citing.links.push_back(cited.url);
    synth.edges.emplace_back(citing.id, cited.id);
  }

  return synth;
}

void write_synthetic_corpus(const SyntheticCorpus& synth, const std::string& articles_path,
                            const std::string& truth_path) {
  std::ofstream articles(articles_path, std::ios::binary);
  if (!articles) throw IoError("cannot write articles file: " + articles_path);
  for (const Article& article : synth.corpus.articles) {
    ordered_json row;
    row["id"] = article.id;
    row["url"] = article.url;
    row["title"] = article.title;
    row["publisher"] = article.publisher;
    row["published_at"] = format_rfc3339(article.published_at);
    if (!article.links.empty()) row["links"] = article.links;
    articles << row.dump() << '\n';
  }
  if (!articles) throw IoError("error while writing articles file: " + articles_path);

  std::ofstream truth(truth_path, std::ios::binary);
  if (!truth) throw IoError("cannot write truth file: " + truth_path);
  for (const TruthRecord& record : synth.truth) {
    truth << record.id << '\t' << record.event << '\t' << (record.original ? 1 : 0) << '\n';
  }
  if (!truth) throw IoError("error while writing truth file: " + truth_path);
}

}  // namespace newsrank
