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

#ifndef NEWSRANK_PAGERANK_HPP_
#define NEWSRANK_PAGERANK_HPP_

#include <string>
#include <vector>

#include <newsrank/citation.hpp>

namespace newsrank {

struct PageRankParams {
  double damping = 0.85;     // must lie in (0, 1)
  double tolerance = 1e-10;  // L1 residual threshold
  int max_iterations = 100;
};

struct PageRankResult {
  std::vector<double> scores;  // indexed by graph vertex; sums to 1
  int iterations = 0;
  double residual = 0.0;       // final L1 change
  bool converged = false;
};

// Power iteration over the citation graph. Scores follow the probability
// convention (they sum to one); mass on dangling vertices is redistributed
// uniformly each step. Iteration stops when the L1 change drops below
// `tolerance` or after `max_iterations` sweeps.
PageRankResult pagerank(const CitationGraph& graph, const PageRankParams& params = {});

// Serial reference and OpenMP variants of the same iteration. Both apply
// identical per-vertex arithmetic, so their outputs match bitwise; the
// serial form is the testing baseline.
PageRankResult pagerank_serial(const CitationGraph& graph, const PageRankParams& params = {});
PageRankResult pagerank_parallel(const CitationGraph& graph, const PageRankParams& params = {});

// JSONL ({"id", "pagerank"}) round-trip for snapshot directories. Loading
// returns scores aligned to `graph` vertex order.
void write_pagerank_jsonl(const CitationGraph& graph, const std::vector<double>& scores,
                          const std::string& path);
std::vector<double> load_pagerank_jsonl(const CitationGraph& graph, const std::string& path);

}  // namespace newsrank

#endif  // NEWSRANK_PAGERANK_HPP_
