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

// Sentence pairs for abstractor training and the pair TSV format.

#ifndef LRSUMM_DATASET_H_
#define LRSUMM_DATASET_H_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lrsumm/corpus.h"

namespace lrsumm {

enum class Provenance { kPseudoParallel, kBacktranslated };

std::string_view to_string(Provenance p);
// Throws InputError on an unknown name.
Provenance parse_provenance(std::string_view name);

// Where a pair came from: the summary, and the aligned article id or the
// generator tag.
struct Origin {
  std::string summary_id;
  std::string source;

  auto operator<=>(const Origin &) const = default;
  bool operator==(const Origin &) const = default;
};

// An (article-side source, summary-side target) training pair.
struct SentencePair {
  static constexpr double kUnsetSimilarity = -1.0;

  TokenizedSentence source;
  TokenizedSentence target;
  double similarity = kUnsetSimilarity;
  Provenance provenance = Provenance::kPseudoParallel;
  Origin origin;

  bool operator==(const SentencePair &) const = default;
};

struct MixtureStats {
  uint64_t pseudo_parallel_count = 0;
  uint64_t backtranslated_count = 0;
  double fraction_pp = 0.0;

  static MixtureStats count(std::span<const SentencePair> pairs);
  bool operator==(const MixtureStats &) const = default;
};

struct MinedDataset {
  std::vector<SentencePair> pairs;
  MixtureStats stats;
};

nlohmann::json to_json(const MixtureStats &stats);

// Pair TSV, one pair per line:
//   source_raw TAB target_raw TAB similarity TAB provenance TAB origin
// Tabs and newlines inside text become single spaces. Similarity uses the
// shortest representation that round-trips. Origin is
// "<summary_id>|<article id or generator tag>"; summary ids must not contain
// '|'.
std::string format_pair_line(const SentencePair &pair);
void write_pairs(std::ostream &out, std::span<const SentencePair> pairs);
// Throws FormatError naming the line.
SentencePair parse_pair_line(std::string_view line, size_t line_no);
std::vector<SentencePair> read_pairs(std::istream &in);

}  // namespace lrsumm

#endif  // LRSUMM_DATASET_H_
