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

// ROUGE-N, ROUGE-L, a METEOR variant with exact and stem matching, and
// corpus-level reports.
//
// Scores are computed on our lowercase tokens with no stemming or stopword
// removal for ROUGE, and macro-averaged over examples. They are close to, not
// bit-compatible with, the perl ROUGE toolkit.

#ifndef LRSUMM_METRICS_H_
#define LRSUMM_METRICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace lrsumm {

using Tokens = std::vector<std::string>;

struct MetricTriple {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  // f1 = 2PR / (P + R), or 0 when P + R = 0.
  static MetricTriple from(double precision, double recall);

  bool operator==(const MetricTriple &) const = default;
};

struct EvalReport {
  MetricTriple rouge1;
  MetricTriple rouge2;
  MetricTriple rougeL;
  double meteor = 0.0;
  double avg_tokens = 0.0;
  size_t n_examples = 0;

  bool operator==(const EvalReport &) const = default;
};

// Clipped n-gram overlap. An empty n-gram set on either side zeroes that
// side's component.
MetricTriple rouge_n(std::span<const std::string> candidate,
                     std::span<const std::string> reference, size_t n);

// Longest common subsequence over the whole token sequences.
MetricTriple rouge_l(std::span<const std::string> candidate,
                     std::span<const std::string> reference);

size_t lcs_length(std::span<const std::string> a,
                  std::span<const std::string> b);

// Unigram alignment produced by the staged METEOR matcher.
struct MeteorAlignment {
  // (candidate position, reference position), ordered by candidate position.
  std::vector<std::pair<size_t, size_t>> links;
  size_t matches = 0;
  size_t chunks = 0;
  // False when a stage hit its search budget and kept the best alignment
  // found so far.
  bool exact = true;
};

// Exact matches first, then Porter-stem matches among the leftovers. Each
// stage takes a maximum matching with the fewest chunks; remaining ties go
// to the leftmost alignment.
MeteorAlignment meteor_align(std::span<const std::string> candidate,
                             std::span<const std::string> reference);

// F_mean = 10PR / (R + 9P), penalty = 0.5 (chunks / m)^3,
// score = F_mean (1 - penalty); 0 without matches.
double meteor_lite(std::span<const std::string> candidate,
                   std::span<const std::string> reference);

// Porter (1980) suffix stripping, following the reference C implementation.
std::string porter_stem(std::string_view token);

// Macro averages over aligned example pairs. Sums are taken over sorted
// per-example values, so the report does not depend on example order or on
// the worker count. Throws std::invalid_argument on a length mismatch or an
// empty input.
EvalReport evaluate(std::span<const Tokens> system,
                    std::span<const Tokens> references, int workers = 1);

nlohmann::json to_json(const MetricTriple &m);
nlohmann::json to_json(const EvalReport &report);
EvalReport eval_report_from_json(const nlohmann::json &j);

}  // namespace lrsumm

#endif  // LRSUMM_METRICS_H_
