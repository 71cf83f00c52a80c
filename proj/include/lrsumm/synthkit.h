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

// Backtranslation expansion of the mined seed and assembly of the final
// abstractor training set.

#ifndef LRSUMM_SYNTHKIT_H_
#define LRSUMM_SYNTHKIT_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lrsumm/dataset.h"
#include "lrsumm/subprocess.h"

namespace lrsumm {

// Produces up to request.j synthetic article sentences per summary sentence,
// best first.
class HypothesisGenerator {
 public:
  virtual ~HypothesisGenerator() = default;
  // Recorded as the origin source of every generated pair.
  virtual std::string tag() const = 0;
  virtual std::vector<GeneratorResponse> generate(
      const std::vector<GeneratorRequest> &requests) = 0;
};

// Seeded token dropout plus bounded local reordering; see
// builtin_noising_generator.
class NoisingGenerator final : public HypothesisGenerator {
 public:
  explicit NoisingGenerator(uint64_t seed) : seed_(seed) {}
  std::string tag() const override { return "noise"; }
  std::vector<GeneratorResponse> generate(
      const std::vector<GeneratorRequest> &requests) override;

 private:
  uint64_t seed_;
};

// Returns the input sentence as its only hypothesis.
class EchoGenerator final : public HypothesisGenerator {
 public:
  std::string tag() const override { return "echo"; }
  std::vector<GeneratorResponse> generate(
      const std::vector<GeneratorRequest> &requests) override;
};

// An external process speaking the line protocol.
class SubprocessGenerator final : public HypothesisGenerator {
 public:
  explicit SubprocessGenerator(const std::string &command);
  std::string tag() const override { return "external"; }
  std::vector<GeneratorResponse> generate(
      const std::vector<GeneratorRequest> &requests) override;

 private:
  GeneratorProcess process_;
};

// "builtin" selects NoisingGenerator(seed), "echo" EchoGenerator, anything
// else is run as a shell command.
std::unique_ptr<HypothesisGenerator> make_generator(const std::string &command,
                                                    uint64_t seed);

// One noised variant of the tokenized sentence. Each token is dropped with
// probability 0.1 (the first token survives when all would go), then every
// surviving token at position i is sorted by i + 4u with u uniform in [0, 1),
// so no token moves more than 3 places. Depends only on (sentence, seed,
// attempt).
std::string noise_variant(const std::string &sentence, uint64_t seed,
                          uint64_t attempt);

// The first j distinct variants over attempts 0, 1, 2, ...; gives up after
// 16 * j attempts, so a sentence with too few distinct variants yields fewer
// than j. Throws DegenerateSentenceError on a sentence without tokens.
std::vector<std::string> builtin_noising_generator(const std::string &sentence,
                                                   uint64_t seed, int j);

struct SummarySentence {
  std::string summary_id;
  TokenizedSentence sentence;
};

std::vector<SummarySentence> summary_sentences(std::span<const Document> summaries);

// One request per sentence with j hypotheses; each hypothesis becomes a
// backtranslated pair (hypothesis -> summary sentence) in input order.
// Sentences answered with no hypotheses are skipped with a warning on `log`.
// Throws ProtocolError when a response carries more than j hypotheses or an
// empty one.
std::vector<SentencePair> expand_with_backtranslation(
    std::span<const SummarySentence> sentences, HypothesisGenerator &generator,
    int j, std::ostream *log = nullptr);

// Pseudo-parallel pairs first, then backtranslated ones, keeping the first
// occurrence of every (source raw, target raw); statistics are recounted.
MinedDataset merge_datasets(const MinedDataset &pp,
                            std::span<const SentencePair> bt);

// Writes the pair TSV and returns the number of lines. Throws ExportError
// carrying the count written so far on an I/O failure.
size_t export_training_pairs(const MinedDataset &dataset,
                             const std::filesystem::path &path);
MinedDataset read_training_pairs(const std::filesystem::path &path);

}  // namespace lrsumm

#endif  // LRSUMM_SYNTHKIT_H_
