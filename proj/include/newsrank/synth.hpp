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

#ifndef NEWSRANK_SYNTH_HPP_
#define NEWSRANK_SYNTH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <newsrank/corpus.hpp>

namespace newsrank {

// Knobs for the synthetic news-event generator used by benchmarks and
// end-to-end tests.
struct SynthParams {
  int events = 50;
  int followers_per_event = 9;  // articles per event = followers + 1
  int publishers = 40;
  int noise_edges = 0;  // total cross-event citations
  std::uint64_t seed = 42;
  std::int64_t snapshot_time = 1767225600;  // 2026-01-01T00:00:00Z
  int window_days = 7;
};

// Ground truth for one generated article.
struct TruthRecord {
  std::string id;
  int event = 0;
  bool original = false;
};

struct SyntheticCorpus {
  CorpusSnapshot corpus;
  std::vector<TruthRecord> truth;
  std::vector<std::pair<std::string, std::string>> edges;  // citing -> cited
};

// Generates `events` disjoint story events. Each event has one original
// article and followers that cite it (plus occasional follower chains);
// follower titles are verbatim or lightly perturbed copies of the
// original's, so events are well separated in title space. With zero
// noise the original is always the strict in-degree maximum of its event.
SyntheticCorpus generate_synthetic_corpus(const SynthParams& params = {});

// Writes corpus articles as the standard articles JSONL and the truth as
// `id <TAB> event <TAB> original` TSV.
void write_synthetic_corpus(const SyntheticCorpus& synth, const std::string& articles_path,
                            const std::string& truth_path);

}  // namespace newsrank

#endif  // NEWSRANK_SYNTH_HPP_
