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

// End-to-end pipeline stages shared by the command-line tool and tests.

#ifndef LRSUMM_PIPELINE_H_
#define LRSUMM_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "lrsumm/corpus.h"
#include "lrsumm/dataset.h"
#include "lrsumm/extractors.h"
#include "lrsumm/metrics.h"
#include "lrsumm/miner.h"

namespace lrsumm {

// One experiment. Serialized as JSON; keys mirror the field names, with
// "extract" and "align" as nested objects. Unknown keys are rejected.
struct PipelineConfig {
  ExtractConfig extract;
  AlignConfig align;
  int j_hypotheses = 5;
  // "identity", or a shell command speaking the line protocol.
  std::string abstractor_command = "identity";
  // "builtin" (seeded noiser), "echo", or a shell command.
  std::string generator_command = "builtin";
  std::filesystem::path word_vectors_path;
  int workers = 1;
  uint64_t seed = 0;

  // Throws InputError when a field is out of range.
  void validate() const;
};

// Fields absent from `j` keep the values already in `config`. Throws
// InputError on unknown keys or mistyped values.
void apply_config_json(PipelineConfig &config, const nlohmann::json &j);
PipelineConfig load_config(const std::filesystem::path &path);
nlohmann::json to_json(const PipelineConfig &config);

struct SummaryResult {
  ExtractedSummary extracted;
  // One paraphrase per pick.
  std::vector<std::string> abstracted;
};

// {"id", "doc_id", "indices", "extracted", "sentences", "text"}; "text" joins
// the abstracted sentences with single spaces.
nlohmann::json to_json(const SummaryResult &result);

// Extracts per config.extract and paraphrases each pick with the abstractor,
// one process per worker over contiguous slices of `articles`. Output order
// is input order. Throws ProtocolError when an abstractor misbehaves.
std::vector<SummaryResult> summarize(std::span<const Document> articles,
                                     const PipelineConfig &config);

// Backtranslated pairs for every summary sentence, one generator per worker
// over contiguous slices.
std::vector<SentencePair> synthesize(std::span<const Document> summaries,
                                     const PipelineConfig &config,
                                     std::ostream *log = nullptr);

// A {"id", "text"} record; "sentences" is accepted in place of "text" and
// joined with spaces.
struct TextRecord {
  std::string id;
  Tokens tokens;
};

// Throws InputError on unreadable files or malformed lines.
std::vector<TextRecord> read_text_records(const std::filesystem::path &path);
TextRecord text_record(const Document &doc);

// Pairs system with reference records by id, in reference order. Throws
// InputError naming the first reference id that has no system record (or the
// first unmatched system id) and on differing counts.
EvalReport evaluate_records(std::span<const TextRecord> system,
                            std::span<const TextRecord> references, int workers);

}  // namespace lrsumm

#endif  // LRSUMM_PIPELINE_H_
