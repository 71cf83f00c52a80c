// Copyright 2026 The lrsumm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Slow, obviously-correct reference computations used only by tests.

#ifndef LRSUMM_TESTING_ORACLES_H_
#define LRSUMM_TESTING_ORACLES_H_

#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lrsumm/corpus.h"
#include "lrsumm/embeddings.h"
#include "lrsumm/metrics.h"
#include "lrsumm/miner.h"

namespace lrsumm::testing {

// Multiset n-gram counting over joined strings.
MetricTriple rouge_n_oracle(const Tokens &cand, const Tokens &ref, size_t n);
// Full (|a|+1) x (|b|+1) table.
size_t lcs_oracle(const Tokens &a, const Tokens &b);
MetricTriple rouge_l_oracle(const Tokens &cand, const Tokens &ref);

// Stationary vector of the damped walk, by Gaussian elimination on
// (I - d M^T) p = (1 - d) / n, normalized to sum 1. Zero rows of `w` become
// uniform.
std::vector<double> pagerank_oracle(const std::vector<std::vector<double>> &w,
                                    double damping);

// Second implementation of the seeded noiser, written from its contract.
std::string noise_variant_oracle(const std::string &sentence, uint64_t seed,
                                 uint64_t attempt);

// (summary id, article id, source raw, target raw)
using MinedKey = std::tuple<std::string, std::string, std::string, std::string>;

struct BruteForceMining {
  std::set<MinedKey> pairs;
  // Smallest distance from any cosine the decisions depended on to a
  // threshold or to a competing candidate. Results are only comparable with
  // the fast path when this is well above rounding noise.
  double margin = 1.0;
};

// Exhaustive mining in long double with plain loops: every summary against
// every article, every sentence against every sentence. Duplicates of
// (source raw, target raw) keep the smallest (summary id, article id).
BruteForceMining mine_oracle(const std::vector<Document> &summaries,
                             const std::vector<Document> &articles,
                             const WordVectorTable &table,
                             const AlignConfig &config);

// Cosine of two sentences under the mean-word-vector embedding, in long
// double; 0 when either side has no known word.
double sentence_cosine_oracle(const TokenizedSentence &a,
                              const TokenizedSentence &b,
                              const WordVectorTable &table);

}  // namespace lrsumm::testing

#endif  // LRSUMM_TESTING_ORACLES_H_
